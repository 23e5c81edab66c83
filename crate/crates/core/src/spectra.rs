//! Levels of `H = N1 + N2 + 2 N3 + 2` (the anisotropic oscillator with
//! frequency ratio 1:1:2): degeneracies and partition counts, each by closed
//! form, brute-force enumeration and a sum over Q⁻(1,1) irreps at `l = (N+1)/4`.

use serde::Serialize;

use crate::algebra::{dimension_of, ClassId, ClassParams};
use crate::exact::{q, Rational};

/// With `N = 4m + r`: `(2m+1)²`, `(2m+1)(2m+2)`, `4(m+1)²`, `2(m+1)(2m+3)`.
pub fn degeneracy_closed(n: u64) -> u64 {
    let (m, r) = (n / 4, n % 4);
    match r {
        0 => (2 * m + 1).pow(2),
        1 => (2 * m + 1) * (2 * m + 2),
        2 => 4 * (m + 1).pow(2),
        _ => 2 * (m + 1) * (2 * m + 3),
    }
}

/// Ordered solutions of `n1 + n2 + 2 n3 = N`.
pub fn degeneracy_brute(n: u64) -> u64 {
    let mut count = 0;
    for n3 in 0..=n / 2 {
        for n1 in 0..=(n - 2 * n3) {
            let n2 = n - 2 * n3 - n1;
            debug_assert_eq!(n1 + n2 + 2 * n3, n);
            count += 1;
        }
    }
    count
}

/// `(m+1)(2m+1)` for `r = 0, 1` and `(m+1)(2m+3)` for `r = 2, 3`.
pub fn partitions_closed(n: u64) -> u64 {
    let (m, r) = (n / 4, n % 4);
    if r < 2 {
        (m + 1) * (2 * m + 1)
    } else {
        (m + 1) * (2 * m + 3)
    }
}

/// Solutions with `n1 >= n2`.
pub fn partitions_brute(n: u64) -> u64 {
    let mut count = 0;
    for n3 in 0..=n / 2 {
        let rest = n - 2 * n3;
        for n2 in 0..=rest {
            if rest - n2 >= n2 {
                count += 1;
            }
        }
    }
    count
}

/// Solutions with `n1 = n2`.
pub fn symmetric_brute(n: u64) -> u64 {
    (0..=n / 2).filter(|n3| (n - 2 * n3).is_multiple_of(2)).count() as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KTerm {
    pub k: Rational,
    pub dim: u64,
    /// 1 for `k = 1/2`, else 2 (the mirrored basis `n1 - n2 = 1 - 2k`).
    pub weight: u64,
}

/// Q⁻(1,1) irreps at `l = (N+1)/4`: every `k` in {1/2, 1, ...} with
/// `2l - k` a nonnegative integer.
pub fn level_irreps(n: u64) -> Vec<KTerm> {
    let l = q(n as i64 + 1, 4);
    // 2l - k = (N + 1 - 2k)/2 is an integer exactly when 2k and N + 1 share parity
    let first = if n.is_multiple_of(2) { 1 } else { 2 };
    (first..=n as i64 + 1)
        .step_by(2)
        .map(|k2| {
            let k = q(k2, 2);
            let p = ClassParams::new(ClassId::QMinus11, k.clone(), l.clone());
            let dim = dimension_of(&p)
                .ok()
                .and_then(|d| d.finite())
                .expect("finite Q-11 irrep");
            KTerm {
                k,
                dim,
                weight: if k2 == 1 { 1 } else { 2 },
            }
        })
        .collect()
}

/// `Σ weight · dim` over [`level_irreps`].
pub fn degeneracy_via_reps(n: u64) -> (u64, Vec<KTerm>) {
    let terms = level_irreps(n);
    let total = terms.iter().map(|t| t.weight * t.dim).sum();
    (total, terms)
}

/// Unweighted `Σ dim` over [`level_irreps`].
pub fn dimension_sum(n: u64) -> u64 {
    level_irreps(n).iter().map(|t| t.dim).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyRecord {
    #[serde(rename = "N")]
    pub n: u64,
    pub l: Rational,
    pub closed: u64,
    pub brute: u64,
    pub via_reps: u64,
    pub k_list: Vec<KTerm>,
}

impl DegeneracyRecord {
    pub fn compute(n: u64) -> Self {
        let (via_reps, k_list) = degeneracy_via_reps(n);
        DegeneracyRecord {
            n,
            l: q(n as i64 + 1, 4),
            closed: degeneracy_closed(n),
            brute: degeneracy_brute(n),
            via_reps,
            k_list,
        }
    }

    pub fn agrees(&self) -> bool {
        self.closed == self.brute && self.brute == self.via_reps
    }

    /// `k:dim:weight` entries joined by `;`.
    pub fn k_list_text(&self) -> String {
        let parts: Vec<String> = self
            .k_list
            .iter()
            .map(|t| format!("{}:{}:{}", t.k, t.dim, t.weight))
            .collect();
        parts.join(";")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionRecord {
    #[serde(rename = "N")]
    pub n: u64,
    pub closed: u64,
    pub brute: u64,
    pub dim_sum: u64,
}

impl PartitionRecord {
    pub fn compute(n: u64) -> Self {
        PartitionRecord {
            n,
            closed: partitions_closed(n),
            brute: partitions_brute(n),
            dim_sum: dimension_sum(n),
        }
    }

    pub fn agrees(&self) -> bool {
        self.closed == self.brute && self.brute == self.dim_sum
    }
}

/// `(N + 2, degeneracy)` for `N = 0..=nmax`.
///
/// # Panics
/// If the closed form disagrees with enumeration (never for this spectrum).
pub fn aniso_spectrum(nmax: u64) -> Vec<(u64, u64)> {
    let mut counts = vec![0u64; nmax as usize + 1];
    for n3 in 0..=nmax / 2 {
        for n1 in 0..=nmax {
            for n2 in 0..=nmax {
                let level = n1 + n2 + 2 * n3;
                if level <= nmax {
                    counts[level as usize] += 1;
                }
            }
        }
    }
    (0..=nmax)
        .map(|n| {
            let d = degeneracy_closed(n);
            assert_eq!(d, counts[n as usize], "level {n}");
            (n + 2, d)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_closed(4), 9);
        assert_eq!(degeneracy_closed(0), 1);
        assert_eq!(degeneracy_closed(6), 16);
        assert_eq!(degeneracy_brute(1), 2);
        assert_eq!(degeneracy_brute(2), 4);
        assert_eq!(degeneracy_brute(0), 1);
    }

    #[test]
    fn via_reps_examples() {
        let (total, terms) = degeneracy_via_reps(2);
        assert_eq!(total, 4);
        let dims: Vec<_> = terms.iter().map(|t| (t.k.clone(), t.dim)).collect();
        assert_eq!(dims, vec![(q(1, 2), 2), (q(3, 2), 1)]);

        let (total, terms) = degeneracy_via_reps(3);
        assert_eq!(total, 6);
        let dims: Vec<_> = terms.iter().map(|t| (t.k.clone(), t.dim, t.weight)).collect();
        assert_eq!(dims, vec![(q(1, 1), 2, 2), (q(2, 1), 1, 2)]);

        let (total, terms) = degeneracy_via_reps(0);
        assert_eq!((total, terms.len()), (1, 1));
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partitions_closed(5), 6);
        assert_eq!(partitions_brute(5), 6);
        assert_eq!(partitions_closed(0), 1);
        assert_eq!(partitions_closed(7), 10);
        assert_eq!(partitions_brute(7), 10);
    }

    #[test]
    fn consistency_identity() {
        for n in 0..=60 {
            assert_eq!(degeneracy_brute(n), 2 * partitions_brute(n) - symmetric_brute(n));
        }
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(aniso_spectrum(0), vec![(2, 1)]);
        assert_eq!(aniso_spectrum(2), vec![(2, 1), (3, 2), (4, 4)]);
        assert!(aniso_spectrum(30).iter().all(|&(e, _)| e >= 2));
    }

    #[test]
    fn record_text() {
        let rec = DegeneracyRecord::compute(2);
        assert!(rec.agrees());
        assert_eq!(rec.k_list_text(), "1/2:2:1;3/2:1:2");
        assert_eq!(rec.l, q(3, 4));
    }
}
