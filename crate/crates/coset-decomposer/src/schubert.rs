//! Schubert symbols: `k`-subsets of `{1..n}` indexing the cells of `Kρ^kK / K` for `GL_n`.

use exact_algebra::HalfPowerLaurent;

use crate::error::DecomposeError;

/// A strictly increasing `k`-subset `j₁ < … < j_k` of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchubertSymbol {
    /// The entries, strictly increasing.
    pub entries: Vec<usize>,
}

impl SchubertSymbol {
    /// `‖j‖ = Σ j_i − k(k+1)/2`; the cell has `q^{‖j‖}` matrices.
    pub fn dimension(&self) -> usize {
        let k = self.entries.len();
        self.entries.iter().sum::<usize>() - k * (k + 1) / 2
    }

    /// True when `self ⪯ other` entrywise.
    pub fn precedes(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len() && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }
}

/// All `C(n, k)` symbols of length `k`, in lexicographic order.
pub fn schubert_symbols(n: usize, k: usize) -> Result<Vec<SchubertSymbol>, DecomposeError> {
    if k == 0 || k > n {
        return Err(DecomposeError::InvalidParameters(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(SchubertSymbol { entries: cur.clone() });
        // Advance to the next combination.
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    Ok(out)
}

/// `Σ_j q^{‖j‖}` over symbols of length `k`: the number of left cosets in `Kρ^kK`.
pub fn gln_minuscule_total(n: usize, k: usize) -> Result<HalfPowerLaurent, DecomposeError> {
    Ok(schubert_symbols(n, k)?.iter().fold(HalfPowerLaurent::zero(), |acc, s| {
        acc + HalfPowerLaurent::q_pow(s.dimension() as i64)
    }))
}
