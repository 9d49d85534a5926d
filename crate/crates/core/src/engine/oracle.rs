use super::membership::{membership, RadicalClass, SearchOptions, Verdict};
use crate::coalgebra::is_subcoalgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::module_coalgebra::ModuleCoalgebra;
use crate::scalar::{FieldKind, Scalar};

const MAX_SUBSPACES: usize = 100_000;

/// Every subspace of `F_p^n`, listed by pivot set and then by the free
/// entries of the reduced basis.
pub fn all_subspaces<S: Scalar>(n: usize) -> Result<Vec<Subspace<S>>> {
    let elems = S::elements()
        .ok_or_else(|| Error::BudgetExceeded("subspace enumeration needs a finite field".into()))?;
    let q = elems.len() as u128;
    let mut total: u128 = 0;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask & (1 << c) != 0).collect();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                ((p + 1)..n)
                    .filter(|c| mask & (1 << c) == 0)
                    .map(move |c| (r, c))
            })
            .collect();
        total += q.pow(free.len() as u32);
        if total > MAX_SUBSPACES as u128 {
            return Err(Error::BudgetExceeded(format!(
                "more than {MAX_SUBSPACES} subspaces of a space of dimension {n}"
            )));
        }
        let mut idx = vec![0usize; free.len()];
        loop {
            let mut rows = vec![vec![S::zero(); n]; pivots.len()];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = S::one();
            }
            for (&(r, c), &i) in free.iter().zip(&idx) {
                rows[r][c] = elems[i].clone();
            }
            out.push(Subspace::from_matrix(&Matrix::from_rows(n, rows)));
            let mut pos = 0;
            while pos < idx.len() {
                idx[pos] += 1;
                if idx[pos] < elems.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// All submodule subcoalgebras, by exhaustive enumeration.
pub fn submodule_coalgebras<S: Scalar>(m: &ModuleCoalgebra<S>) -> Result<Vec<Subspace<S>>> {
    Ok(all_subspaces::<S>(m.dim())?
        .into_iter()
        .filter(|d| is_subcoalgebra(m.coalgebra(), d) && m.is_submodule(d))
        .collect())
}

#[derive(Clone, Debug)]
pub struct BruteForce<S> {
    /// Every submodule subcoalgebra.
    pub candidates: Vec<Subspace<S>>,
    /// Those lying in the class.
    pub members: Vec<Subspace<S>>,
    /// Sum of all members.
    pub radical: Subspace<S>,
}

/// Radical by enumerating every subspace; only for `F_2`, `F_3` and dimension at most 6.
pub fn brute_force_radical<S: Scalar>(
    m: &ModuleCoalgebra<S>,
    class: RadicalClass,
) -> Result<BruteForce<S>> {
    match S::field() {
        FieldKind::Prime(p) if p <= 3 && m.dim() <= 6 => {}
        f => {
            return Err(Error::BudgetExceeded(format!(
                "brute force needs p ≤ 3 and dim ≤ 6, got {f} and dim {}",
                m.dim()
            )))
        }
    }
    let candidates = submodule_coalgebras(m)?;
    let opts = SearchOptions {
        seed: 0,
        trials: 8,
        v_max: usize::MAX,
        grid_cap: 3usize.pow(9),
    };
    let mut members = Vec::new();
    let mut radical = Subspace::zero(m.dim());
    for d in &candidates {
        match membership(&m.restrict(d)?, class, &opts, 0)?.verdict {
            Verdict::Yes => {
                radical = radical.sum(d)?;
                members.push(d.clone());
            }
            Verdict::No => {}
            Verdict::Unknown => {
                return Err(Error::BudgetExceeded(
                    "undecided membership during brute force".into(),
                ))
            }
        }
    }
    if membership(&m.restrict(&radical)?, class, &opts, 0)?.verdict != Verdict::Yes {
        return Err(Error::Internal("sum of members is not a member".into()));
    }
    Ok(BruteForce {
        candidates,
        members,
        radical,
    })
}
