//! The finite Weyl group as a table of integer matrices acting on the cocharacter lattice.

use std::collections::{HashMap, VecDeque};

use root_datum::RootDatum;

/// A square integer matrix acting on column vectors.
pub type Mat = Vec<Vec<i64>>;

/// The `n × n` identity matrix.
pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// Matrix product `a · b`.
pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Matrix-vector product `a · v`.
pub fn mat_vec(a: &Mat, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// Transpose.
pub fn transpose(a: &Mat) -> Mat {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

/// An element of the finite Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// Action on cocharacters (column vectors).
    pub matrix: Mat,
    /// Coxeter length.
    pub length: usize,
    /// Canonical reduced word in simple labels `1..=l`, read as a product left to right.
    pub word: Vec<usize>,
}

impl WeylElement {
    /// Applies the element to a cocharacter.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        mat_vec(&self.matrix, v)
    }
}

/// The finite Weyl group of a root datum, fully enumerated.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: RootDatum,
    simple: Vec<Mat>,
    elements: Vec<WeylElement>,
    index: HashMap<Mat, usize>,
}

/// The matrix of the reflection in `roots()[i]`.
pub fn reflection_matrix(datum: &RootDatum, i: usize) -> Mat {
    let r = datum.rank();
    let cols: Vec<Vec<i64>> = identity(r).iter().map(|e| datum.reflect(e, i)).collect();
    transpose(&cols)
}

impl WeylGroup {
    /// Enumerates the Weyl group by breadth-first search over simple reflections.
    pub fn new(datum: &RootDatum) -> Self {
        let r = datum.rank();
        let simple: Vec<Mat> = (1..=datum.num_simple())
            .map(|i| reflection_matrix(datum, datum.simple_index(i)))
            .collect();
        let mut mats = vec![identity(r)];
        let mut lengths = vec![0usize];
        let mut index = HashMap::from([(identity(r), 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for s in &simple {
                let m = mat_mul(s, &mats[k]);
                if !index.contains_key(&m) {
                    index.insert(m.clone(), mats.len());
                    mats.push(m);
                    lengths.push(lengths[k] + 1);
                    queue.push_back(mats.len() - 1);
                }
            }
        }
        // Canonical words: greedy lowest-index left descent.
        let mut words: Vec<Option<Vec<usize>>> = vec![None; mats.len()];
        let mut order: Vec<usize> = (0..mats.len()).collect();
        order.sort_by_key(|&k| lengths[k]);
        for &k in &order {
            if lengths[k] == 0 {
                words[k] = Some(Vec::new());
                continue;
            }
            for (i, s) in simple.iter().enumerate() {
                let j = index[&mat_mul(s, &mats[k])];
                if lengths[j] < lengths[k] {
                    let mut w = vec![i + 1];
                    w.extend(words[j].clone().expect("shorter words are built first"));
                    words[k] = Some(w);
                    break;
                }
            }
        }
        let elements = mats
            .into_iter()
            .zip(lengths)
            .zip(words)
            .map(|((matrix, length), word)| WeylElement {
                matrix,
                length,
                word: word.expect("every element has a word"),
            })
            .collect();
        Self {
            datum: datum.clone(),
            simple,
            elements,
            index,
        }
    }

    /// The underlying root datum.
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    /// All elements, sorted by length (identity first).
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Matrix of the simple reflection with label `i ∈ 1..=l`.
    pub fn simple_matrix(&self, i: usize) -> &Mat {
        &self.simple[i - 1]
    }

    /// Looks up an element by its matrix.
    pub fn lookup(&self, m: &Mat) -> Option<&WeylElement> {
        self.index.get(m).map(|&k| &self.elements[k])
    }

    /// The longest element `w∘`.
    pub fn longest(&self) -> &WeylElement {
        self.elements.iter().max_by_key(|e| e.length).expect("nonempty group")
    }

    /// The product of simple reflection matrices along a word.
    pub fn word_matrix(&self, word: &[usize]) -> Mat {
        word.iter().fold(identity(self.datum.rank()), |acc, &i| {
            mat_mul(&acc, &self.simple[i - 1])
        })
    }

    /// Whether `w⁻¹α > 0` for the root `roots()[i]`.
    pub fn inverse_keeps_positive(&self, w: &Mat, i: usize) -> bool {
        // As a character, w⁻¹α = α ∘ w, i.e. wᵀα.
        let chi = mat_vec(&transpose(w), &self.datum.roots()[i]);
        let j = self.datum.root_index(&chi).expect("Weyl group permutes roots");
        self.datum.is_positive(j)
    }

    /// The stabilizer of a cocharacter.
    pub fn stabilizer(&self, v: &[i64]) -> Vec<&WeylElement> {
        self.elements.iter().filter(|e| e.apply(v) == v).collect()
    }
}
