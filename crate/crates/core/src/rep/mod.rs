//! Exact tridiagonal irreps: `Q0` diagonal, `Q+` on the subdiagonal and
//! `Q- = Q+ᵀ` on the superdiagonal.

pub mod dynamics;

use serde::Serialize;

use crate::algebra::{
    casimir_correction, casimir_eigenvalue, casimir_value, class_structure_constants,
    lowest_weight, structure_function, ClassId, ClassParams, Mode,
    QuadraticAlgebraSpec,
};
use crate::error::{Error, Result};
use crate::exact::{sqrt_exact, Rational, SqrtRational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleRep {
    pub params: ClassParams,
    pub dim: usize,
    /// Infinite irrep cut to its first `dim` states.
    pub truncated: bool,
    /// Built from a rational `k` outside {1/2, 1, ...}.
    pub extended: bool,
    pub q0_diag: Vec<Rational>,
    /// Entry `i` maps basis state `i` to `i + 1`.
    pub qplus_sub: Vec<SqrtRational>,
    /// Entry `i` maps basis state `i + 1` to `i`.
    pub qminus_super: Vec<SqrtRational>,
}

impl TripleRep {
    /// Square of the `Q+` entry from `i` to `i + 1`; zero outside the matrix.
    pub fn raise_sq(&self, i: isize) -> Rational {
        if i < 0 {
            return Rational::zero();
        }
        self.qplus_sub
            .get(i as usize)
            .map(SqrtRational::square)
            .unwrap_or_else(Rational::zero)
    }

    pub fn export(&self) -> RepExport {
        RepExport {
            params: self.params.clone(),
            dim: self.dim,
            truncated: self.truncated,
            q0: self.q0_diag.clone(),
            qplus: self.qplus_sub.clone(),
        }
    }

    /// Dense `(Q0, Q+, Q-)` in floating point.
    pub fn dense_f64(&self) -> [nalgebra::DMatrix<f64>; 3] {
        let n = self.dim;
        let q0 = nalgebra::DMatrix::from_fn(n, n, |r, c| {
            if r == c {
                self.q0_diag[r].to_f64()
            } else {
                0.0
            }
        });
        let qp = nalgebra::DMatrix::from_fn(n, n, |r, c| {
            if r == c + 1 {
                self.qplus_sub[c].to_f64()
            } else {
                0.0
            }
        });
        let qm = qp.transpose();
        [q0, qp, qm]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RepExport {
    pub params: ClassParams,
    pub dim: usize,
    pub truncated: bool,
    pub q0: Vec<Rational>,
    pub qplus: Vec<SqrtRational>,
}

fn assemble(
    params: ClassParams,
    extended: bool,
    truncated: bool,
    dim: usize,
    lowest: Rational,
    raise_sq: impl Fn(&Rational) -> Rational,
) -> Result<TripleRep> {
    let q0_diag: Vec<Rational> = (0..dim).map(|i| &lowest + Rational::from(i)).collect();
    let mut qplus_sub = Vec::with_capacity(dim.saturating_sub(1));
    for i in 0..dim.saturating_sub(1) {
        let e2 = raise_sq(&Rational::from(i));
        if e2.is_negative() {
            return Err(Error::Domain(format!(
                "negative squared matrix element {e2} at row {i}"
            )));
        }
        qplus_sub.push(sqrt_exact(&e2)?);
    }
    Ok(TripleRep {
        params,
        dim,
        truncated,
        extended,
        q0_diag,
        qminus_super: qplus_sub.clone(),
        qplus_sub,
    })
}

pub fn build_su2_rep(j: &Rational) -> Result<TripleRep> {
    build_rep(&ClassParams::su2(j.clone()), None)
}

pub fn build_su11_rep(k: &Rational, nmax: usize) -> Result<TripleRep> {
    build_rep(&ClassParams::su11(k.clone()), Some(nmax))
}

/// Builds the irrep of `params`. `nmax` (last kept state index) is required
/// for the infinite series and ignored otherwise.
pub fn build_rep(params: &ClassParams, nmax: Option<usize>) -> Result<TripleRep> {
    let v = params.require(Mode::Extended)?;
    let s = params.spin.clone();
    let l = params.l.clone();
    let two = Rational::from(2);
    let one = Rational::one();
    let lowest = lowest_weight(params);

    let (dim, truncated) = if params.class.is_infinite() {
        let n = nmax.ok_or_else(|| Error::MissingNmax(params.class.to_string()))?;
        (n + 1, true)
    } else {
        let d = crate::algebra::dimension_of(params)?
            .finite()
            .expect("finite class");
        (d as usize, false)
    };

    // su(2)-based classes index by m = -j + i, the others by n = i.
    let p = params.clone();
    let ext = v.extended;
    match params.class {
        ClassId::Su2 => assemble(p, ext, truncated, dim, lowest, |i| {
            let m = i - &s;
            (&s - &m) * (&s + &m + &one)
        }),
        ClassId::Su11 => assemble(p, ext, truncated, dim, lowest, |n| {
            (&two * &s + n) * (n + &one)
        }),
        ClassId::QMinus2 => assemble(p, ext, truncated, dim, lowest, |i| {
            let m = i - &s;
            (&s - &m) * (&s + &m + &one) * (&two * &l - &m)
        }),
        ClassId::QPlus2 => assemble(p, ext, truncated, dim, lowest, |i| {
            let m = i - &s;
            (&s - &m) * (&s + &m + &one) * (&m - &two * &l + &one)
        }),
        ClassId::QMinus11 => assemble(p, ext, truncated, dim, lowest, |n| {
            (n + &two * &s) * (n + &one) * (&two * &l - &s - n)
        }),
        ClassId::QPlus11 => assemble(p, ext, truncated, dim, lowest, |n| {
            (n + &two * &s) * (n + &one) * (n + &s - &two * &l + &one)
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: String,
    pub row: usize,
    pub residual: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub params: ClassParams,
    pub spec: QuadraticAlgebraSpec,
    pub dim: usize,
    /// Rows where `[Q+, Q-] = f(Q0)` was checked.
    pub rows_checked: usize,
    /// Last row of a truncated rep, where the cut removes a `Q-Q+` term.
    pub boundary_row: Option<usize>,
    /// Largest violation by absolute residual; `None` when all are zero.
    pub max_violation: Option<Violation>,
    pub passed: bool,
}

fn record(worst: &mut Option<Violation>, relation: &str, row: usize, residual: Rational) {
    if residual.is_zero() {
        return;
    }
    let bigger = worst
        .as_ref()
        .is_none_or(|w| residual.abs() > w.residual.abs());
    if bigger {
        *worst = Some(Violation {
            relation: relation.to_string(),
            row,
            residual,
        });
    }
}

/// Exact check of `[Q0, Q±] = ±Q±`, `Q- = Q+ᵀ` and `[Q+, Q-] = f(Q0)`.
///
/// With `Q+` strictly subdiagonal, `[Q+, Q-]` is diagonal with row `i` equal
/// to `e(i-1)² - e(i)²`, so each relation reduces to scalar identities.
pub fn verify_relations(rep: &TripleRep) -> Result<RelationReport> {
    let spec = class_structure_constants(&rep.params)?;
    let f = structure_function(&spec);
    let mut worst = None;

    for i in 0..rep.dim.saturating_sub(1) {
        if !rep.qplus_sub[i].is_zero() {
            let step = &rep.q0_diag[i + 1] - &rep.q0_diag[i];
            record(&mut worst, "[Q0,Q+]=Q+", i + 1, step - Rational::one());
        }
        if rep.qminus_super[i] != rep.qplus_sub[i] {
            let d = rep.qminus_super[i].square() - rep.qplus_sub[i].square();
            record(&mut worst, "Q-=Q+^T", i, d);
        }
    }

    let boundary_row = rep.truncated.then(|| rep.dim - 1);
    let mut rows_checked = 0;
    for i in 0..rep.dim {
        if Some(i) == boundary_row {
            continue;
        }
        let lhs = rep.raise_sq(i as isize - 1) - rep.raise_sq(i as isize);
        record(&mut worst, "[Q+,Q-]=f(Q0)", i, lhs - f.eval(&rep.q0_diag[i]));
        rows_checked += 1;
    }

    Ok(RelationReport {
        params: rep.params.clone(),
        spec,
        dim: rep.dim,
        rows_checked,
        boundary_row,
        passed: worst.is_none(),
        max_violation: worst,
    })
}

/// Diagonal of `Q+ Q- + p(Q0)`. `Q+ Q-` only needs the entry into row `i`,
/// which survives truncation, so every row is meaningful.
pub fn casimir_diag(rep: &TripleRep) -> Result<Vec<Rational>> {
    let spec = class_structure_constants(&rep.params)?;
    let p = casimir_correction(&structure_function(&spec));
    Ok((0..rep.dim)
        .map(|i| rep.raise_sq(i as isize - 1) + p.eval(&rep.q0_diag[i]))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CasimirReport {
    pub params: ClassParams,
    pub diag: Vec<Rational>,
    pub constant: bool,
    /// Eigenvalue carried by the matrices.
    pub eigenvalue: Rational,
    /// The quoted closed form (see [`casimir_value`]).
    pub closed_form: Rational,
    pub matches_eigenvalue: bool,
    pub matches_closed_form: bool,
}

impl CasimirReport {
    pub fn passed(&self) -> bool {
        self.constant && self.matches_eigenvalue
    }
}

pub fn casimir_report(rep: &TripleRep) -> Result<CasimirReport> {
    let diag = casimir_diag(rep)?;
    let eigenvalue = casimir_eigenvalue(&rep.params)?;
    let closed_form = casimir_value(&rep.params)?;
    let constant = diag.windows(2).all(|w| w[0] == w[1]);
    Ok(CasimirReport {
        params: rep.params.clone(),
        matches_eigenvalue: diag.iter().all(|d| *d == eigenvalue),
        matches_closed_form: diag.iter().all(|d| *d == closed_form),
        diag,
        constant,
        eigenvalue,
        closed_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn sq(c: Rational, rad: u64) -> SqrtRational {
        SqrtRational::new(c, rad).unwrap()
    }

    #[test]
    fn su2_examples() {
        let rep = build_su2_rep(&q(1, 2)).unwrap();
        assert_eq!(rep.q0_diag, vec![q(-1, 2), q(1, 2)]);
        assert_eq!(rep.qplus_sub, vec![SqrtRational::one()]);

        let rep = build_su2_rep(&r(1)).unwrap();
        assert_eq!(rep.qplus_sub, vec![sq(r(1), 2), sq(r(1), 2)]);

        let rep = build_su2_rep(&r(0)).unwrap();
        assert_eq!(rep.dim, 1);
        assert_eq!(rep.q0_diag, vec![r(0)]);
        assert!(rep.qplus_sub.is_empty());

        assert!(build_su2_rep(&q(1, 3)).is_err());
    }

    #[test]
    fn su11_examples() {
        let rep = build_su11_rep(&q(1, 2), 3).unwrap();
        assert!(rep.truncated);
        assert_eq!(rep.qplus_sub[0], SqrtRational::one());
        let rep = build_su11_rep(&r(1), 3).unwrap();
        assert_eq!(rep.q0_diag, vec![r(1), r(2), r(3), r(4)]);
        let rep = build_su11_rep(&r(2), 2).unwrap();
        assert_eq!(rep.qplus_sub[0], SqrtRational::from_rational(r(2)));
        assert!(build_su11_rep(&r(0), 2).is_err());
    }

    #[test]
    fn class_examples() {
        let rep = build_rep(&ClassParams::new(ClassId::QMinus2, q(1, 2), q(1, 4)), None).unwrap();
        assert_eq!(rep.q0_diag, vec![q(-3, 4), q(1, 4)]);
        assert_eq!(rep.qplus_sub, vec![SqrtRational::one()]);

        for k2 in 1..8 {
            let k = q(k2, 2);
            let l = (&k + r(1)) / r(2);
            let rep = build_rep(&ClassParams::new(ClassId::QMinus11, k.clone(), l), None).unwrap();
            assert_eq!(rep.q0_diag, vec![(&k - r(1)) / r(2), (&k + r(1)) / r(2)]);
            assert_eq!(rep.qplus_sub[0].square(), r(2) * &k);
        }

        let p = ClassParams::new(ClassId::QPlus11, r(2), r(1));
        let rep = build_rep(&p, Some(3)).unwrap();
        assert_eq!(rep.q0_diag, vec![r(1), r(2), r(3), r(4)]);
        assert_eq!(
            rep.qplus_sub,
            vec![sq(r(2), 1), sq(r(2), 5), sq(r(3), 6)]
        );
        assert!(matches!(build_rep(&p, None), Err(Error::MissingNmax(_))));
    }

    #[test]
    fn relation_examples() {
        let report = verify_relations(&build_su2_rep(&q(3, 2)).unwrap()).unwrap();
        assert!(report.passed);
        assert_eq!(report.rows_checked, 4);
        assert_eq!(report.boundary_row, None);

        let rep = build_rep(&ClassParams::new(ClassId::QMinus2, r(1), r(0)), None).unwrap();
        assert_eq!(rep.q0_diag, vec![r(-1), r(0)]);
        // [Q+,Q-] = diag(-e0², e0²) and f(-1) = -2, f(0) = 2
        assert_eq!(rep.raise_sq(0), r(2));
        assert!(verify_relations(&rep).unwrap().passed);

        let rep = build_rep(&ClassParams::new(ClassId::QPlus11, r(2), r(1)), Some(8)).unwrap();
        let report = verify_relations(&rep).unwrap();
        assert!(report.passed);
        assert_eq!(report.boundary_row, Some(8));
        assert_eq!(report.rows_checked, 8);
    }

    #[test]
    fn boundary_row_really_fails() {
        let rep = build_rep(&ClassParams::new(ClassId::QPlus11, r(2), r(1)), Some(4)).unwrap();
        let spec = class_structure_constants(&rep.params).unwrap();
        let f = structure_function(&spec);
        let last = rep.dim - 1;
        let lhs = rep.raise_sq(last as isize - 1);
        assert_ne!(lhs, f.eval(&rep.q0_diag[last]));
    }

    #[test]
    fn tampered_rep_is_caught() {
        let mut rep = build_su2_rep(&r(1)).unwrap();
        rep.qplus_sub[1] = SqrtRational::one();
        let report = verify_relations(&rep).unwrap();
        assert!(!report.passed);
        assert!(report.max_violation.is_some());
    }

    #[test]
    fn casimir_examples() {
        let rep = build_rep(&ClassParams::new(ClassId::QMinus2, q(1, 2), q(1, 4)), None).unwrap();
        // 2x2 by hand: Q+Q- = diag(0, 1), p(-3/4) = 7/64, p(1/4) = -57/64
        assert_eq!(casimir_diag(&rep).unwrap(), vec![q(7, 64), q(7, 64)]);

        let rep = build_su2_rep(&r(1)).unwrap();
        assert_eq!(casimir_diag(&rep).unwrap(), vec![r(2); 3]);

        let rep = build_rep(&ClassParams::new(ClassId::QPlus11, r(2), r(1)), Some(5)).unwrap();
        let report = casimir_report(&rep).unwrap();
        assert!(report.constant);
        assert_eq!(report.eigenvalue, r(0));
        assert_eq!(report.closed_form, r(-3));
    }

    fn float_oracle(rep: &TripleRep) -> f64 {
        // dense commutators against f(Q0), skipping a truncation boundary
        let spec = class_structure_constants(&rep.params).unwrap();
        let [q0, qp, qm] = rep.dense_f64();
        let (a, b, c) = (spec.a.to_f64(), spec.b.to_f64(), spec.c.to_f64());
        let n = rep.dim;
        let id = nalgebra::DMatrix::<f64>::identity(n, n);
        let comm = &qp * &qm - &qm * &qp;
        let f = &q0 * &q0 * a + &q0 * b + id * c;
        let r1 = &q0 * &qp - &qp * &q0 - &qp;
        let rows = if rep.truncated { n - 1 } else { n };
        let mut worst = r1.abs().max();
        for i in 0..rows {
            for j in 0..rows {
                worst = worst.max((comm[(i, j)] - f[(i, j)]).abs());
            }
        }
        worst
    }

    #[test]
    fn dense_oracle_agrees() {
        for p in [
            ClassParams::new(ClassId::QMinus2, r(2), q(1, 2)),
            ClassParams::new(ClassId::QMinus2, q(3, 2), q(5, 4)),
            ClassParams::new(ClassId::QPlus2, q(3, 2), q(-7, 4)),
            ClassParams::new(ClassId::QMinus11, q(3, 2), q(11, 4)),
            ClassParams::new(ClassId::QPlus11, q(5, 2), q(1, 4)),
        ] {
            let rep = build_rep(&p, Some(10)).unwrap();
            assert!(verify_relations(&rep).unwrap().passed, "{p}");
            assert!(float_oracle(&rep) < 1e-9, "{p}");
        }
    }

    #[test]
    fn export_shape() {
        let rep = build_rep(&ClassParams::new(ClassId::QMinus2, q(1, 2), q(1, 4)), None).unwrap();
        let json = serde_json::to_value(rep.export()).unwrap();
        assert_eq!(json["dim"], 2);
        assert_eq!(json["q0"][0], "-3/4");
        assert_eq!(json["qplus"][0]["radicand"], 1);
    }
}
