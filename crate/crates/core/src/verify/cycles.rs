use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::ind_r;
use crate::error::Result;
use crate::graph::Family;
use crate::homology::integer_homology;
use crate::{Error, Limits};

/// Expected reduced homology of `Ind_r(C_n)` as a wedge of spheres, keyed by
/// dimension. Writing `n = (r+1)k + l` with `k = ⌊n/(r+1)⌋`: `r` spheres of
/// dimension `rk - k - 1` when `l = 0`, otherwise one sphere of dimension
/// `rk - k + l - 2`. Valid for `n - 1 ≥ r ≥ 2`.
pub fn cycle_wedge(n: usize, r: usize) -> Result<BTreeMap<isize, u64>> {
    if r < 2 || n < r + 1 {
        return Err(Error::param("r", r, "2 <= r <= n - 1"));
    }
    let (k, l) = ((n / (r + 1)) as isize, (n % (r + 1)) as isize);
    let r = r as isize;
    Ok(if l == 0 {
        BTreeMap::from([(r * k - k - 1, r as u64)])
    } else {
        BTreeMap::from([(r * k - k + l - 2, 1)])
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleHomologyRow {
    pub n: usize,
    pub r: usize,
    pub expected: BTreeMap<isize, u64>,
    /// Nonzero integral Betti numbers found.
    pub found: BTreeMap<isize, u64>,
    pub torsion_free: bool,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleHomologyReport {
    pub rows: Vec<CycleHomologyRow>,
}

impl CycleHomologyReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

/// Integral homology of `Ind_r(C_n)` against [`cycle_wedge`], for every `n` in
/// `ns` and `r` in `rs` with `2 ≤ r ≤ n - 1`.
pub fn cycle_homology_check(
    ns: impl IntoIterator<Item = usize>,
    rs: impl IntoIterator<Item = usize> + Clone,
    limits: &Limits,
) -> Result<CycleHomologyReport> {
    let pairs: Vec<(usize, usize)> = ns
        .into_iter()
        .flat_map(|n| rs.clone().into_iter().filter(move |&r| r >= 2 && r < n).map(move |r| (n, r)))
        .collect();
    let rows = pairs
        .into_par_iter()
        .map(|(n, r)| {
            let d = ind_r(&Family::Cycle(n).build()?, r, limits.max_faces)?;
            let h = integer_homology(&d, limits.max_faces)?;
            let found: BTreeMap<isize, u64> = h.betti.iter().filter(|(_, &b)| b > 0).map(|(&d, &b)| (d, b)).collect();
            let torsion_free = h.torsion.values().all(Vec::is_empty);
            let expected = cycle_wedge(n, r)?;
            Ok(CycleHomologyRow {
                n,
                r,
                matches: torsion_free && found == expected,
                expected,
                found,
                torsion_free,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CycleHomologyReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn betti(n: usize, r: usize) -> BTreeMap<isize, u64> {
        let report = cycle_homology_check([n], [r], &Limits::DEFAULT).unwrap();
        assert!(report.all_match(), "{report:?}");
        report.rows[0].found.clone()
    }

    #[test]
    fn small_cycles() {
        assert_eq!(betti(6, 2), BTreeMap::from([(1, 2)]));
        assert_eq!(betti(5, 2), BTreeMap::from([(1, 1)]));
        assert_eq!(betti(4, 3), BTreeMap::from([(1, 3)]));
        // Ind_2(C_4) is two disjoint edges.
        assert_eq!(betti(4, 2), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn full_range() {
        let report = cycle_homology_check(4..=10, 2..=4, &Limits::DEFAULT).unwrap();
        assert_eq!(report.rows.len(), 2 + 3 * 6);
        assert!(report.all_match());
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(cycle_wedge(3, 3).is_err());
        assert!(cycle_wedge(5, 1).is_err());
    }
}
