//! Constructions on top of the irreps: the Tavis–Cummings Hamiltonian in a
//! Q⁻(2) irrep, the shifted `X` generators, and the quadratic (deformed)
//! oscillator carried by Q⁻(1,1).

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::algebra::{ClassId, ClassParams};
use crate::error::{Error, Result};
use crate::exact::{sqrt_exact, Rational, SqrtRational};
use crate::poly::Polynomial;

use super::{build_rep, TripleRep};

/// Field/atom frequency `omega` and a real coupling `g` (units with ħ = 1).
/// A complex `g` only rephases `Q±` and leaves the spectrum unchanged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TcParams {
    pub omega: Rational,
    pub g: Rational,
}

impl TcParams {
    pub fn new(omega: Rational, g: Rational) -> Result<Self> {
        if !omega.is_positive() {
            return Err(Error::InvalidParams(format!("omega = {omega} must be positive")));
        }
        Ok(TcParams { omega, g })
    }
}

#[derive(Clone, Debug)]
pub struct TcSpectrum {
    pub params: ClassParams,
    pub matrix: DMatrix<f64>,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
}

fn require_class(params: &ClassParams, class: ClassId) -> Result<()> {
    if params.class != class {
        return Err(Error::InvalidParams(format!(
            "expected a {class} irrep, got {}",
            params.class
        )));
    }
    Ok(())
}

/// `H = 2ωl + g(Q+ + Q-)`: on the irrep `J0 + a†a = 2ℒ` is the scalar `2l`.
pub fn tavis_cummings_matrix(params: &ClassParams, tc: &TcParams) -> Result<TcSpectrum> {
    require_class(params, ClassId::QMinus2)?;
    TcParams::new(tc.omega.clone(), tc.g.clone())?;
    let rep = build_rep(params, None)?;
    let shift = 2.0 * tc.omega.to_f64() * params.l.to_f64();
    let g = tc.g.to_f64();
    let n = rep.dim;
    let matrix = DMatrix::from_fn(n, n, |r, c| {
        if r == c {
            shift
        } else if r == c + 1 {
            g * rep.qplus_sub[c].to_f64()
        } else if c == r + 1 {
            g * rep.qminus_super[r].to_f64()
        } else {
            0.0
        }
    });
    let mut eigenvalues: Vec<f64> = SymmetricEigen::new(matrix.clone())
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(TcSpectrum {
        params: params.clone(),
        matrix,
        eigenvalues,
    })
}

/// Largest `|λ_i + λ_{n-1-i}|` over the spectrum of `H - 2ωl`.
pub fn spectral_asymmetry(spec: &TcSpectrum, tc: &TcParams) -> f64 {
    let shift = 2.0 * tc.omega.to_f64() * spec.params.l.to_f64();
    let ev: Vec<f64> = spec.eigenvalues.iter().map(|e| e - shift).collect();
    let n = ev.len();
    (0..n)
        .map(|i| (ev[i] + ev[n - 1 - i]).abs())
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XGeneratorReport {
    pub params: ClassParams,
    pub rows_checked: usize,
    pub max_residual: Rational,
    pub passed: bool,
}

/// With `X3 = Q0 + l` and `X± = Q±`, checks `[X3, X±] = ±X±` and
/// `[X+, X-] = -3 X3² + (4l+1) X3 + j(j+1)`.
pub fn x_generator_check(params: &ClassParams) -> Result<XGeneratorReport> {
    require_class(params, ClassId::QMinus2)?;
    let rep = build_rep(params, None)?;
    let l = &params.l;
    let rhs = Polynomial::new(vec![
        params.central_casimir(),
        Rational::from(4) * l + Rational::one(),
        Rational::from(-3),
    ]);
    let mut worst = Rational::zero();
    for i in 0..rep.dim {
        let x3 = &rep.q0_diag[i] + l;
        let lhs = rep.raise_sq(i as isize - 1) - rep.raise_sq(i as isize);
        let res = (lhs - rhs.eval(&x3)).abs();
        if res > worst {
            worst = res;
        }
        if i + 1 < rep.dim && !rep.qplus_sub[i].is_zero() {
            let step = (&rep.q0_diag[i + 1] + l) - x3;
            let res = (step - Rational::one()).abs();
            if res > worst {
                worst = res;
            }
        }
    }
    Ok(XGeneratorReport {
        params: params.clone(),
        rows_checked: rep.dim,
        passed: worst.is_zero(),
        max_residual: worst,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformedOscillator {
    pub params: ClassParams,
    /// `l(l+1) - k(1-k)`
    pub normalizer: Rational,
    /// `N = Q0`
    pub n_diag: Vec<Rational>,
    /// Entry `i` of `A` maps `i + 1` to `i`; `A†` is the transpose.
    pub a_entries: Vec<SqrtRational>,
    /// `[A, A†] = F(N)`
    pub f: Polynomial,
    pub rows_checked: usize,
    pub max_residual: Rational,
    pub passed: bool,
}

/// `A = Q- / sqrt(ℒ(ℒ+1) - 𝒦)` in a Q⁻(1,1) irrep, with
/// `F(N) = 1 - (2l-1)N/norm - 3N²/norm`.
pub fn deformed_oscillator(params: &ClassParams) -> Result<DeformedOscillator> {
    require_class(params, ClassId::QMinus11)?;
    let rep: TripleRep = build_rep(params, None)?;
    let l = &params.l;
    let norm = l * &(l + Rational::one()) - params.central_casimir();
    if !norm.is_positive() {
        return Err(Error::NonpositiveNormalizer(norm.to_string()));
    }
    let root = sqrt_exact(&norm)?;
    let a_entries = rep
        .qminus_super
        .iter()
        .map(|e| e.div(&root))
        .collect::<Result<Vec<_>>>()?;
    let inv = norm.recip();
    let f = Polynomial::new(vec![
        Rational::one(),
        -(Rational::from(2) * l - Rational::one()) * &inv,
        Rational::from(-3) * &inv,
    ]);

    let a_sq = |i: isize| -> Rational {
        if i < 0 {
            return Rational::zero();
        }
        a_entries
            .get(i as usize)
            .map(SqrtRational::square)
            .unwrap_or_else(Rational::zero)
    };
    let mut worst = Rational::zero();
    for i in 0..rep.dim {
        // (AA†)_ii - (A†A)_ii
        let lhs = a_sq(i as isize) - a_sq(i as isize - 1);
        let res = (lhs - f.eval(&rep.q0_diag[i])).abs();
        if res > worst {
            worst = res;
        }
    }
    Ok(DeformedOscillator {
        params: params.clone(),
        normalizer: norm,
        n_diag: rep.q0_diag,
        a_entries,
        f,
        rows_checked: rep.dim,
        passed: worst.is_zero(),
        max_residual: worst,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn tc(omega: i64, g: i64) -> TcParams {
        TcParams::new(r(omega), r(g)).unwrap()
    }

    #[test]
    fn tc_two_level() {
        let p = ClassParams::new(ClassId::QMinus2, q(1, 2), q(1, 4));
        let s = tavis_cummings_matrix(&p, &tc(1, 1)).unwrap();
        assert!((s.eigenvalues[0] + 0.5).abs() < 1e-12);
        assert!((s.eigenvalues[1] - 1.5).abs() < 1e-12);
    }

    #[test]
    fn tc_zero_coupling() {
        let p = ClassParams::new(ClassId::QMinus2, r(2), q(3, 2));
        let s = tavis_cummings_matrix(&p, &tc(3, 0)).unwrap();
        assert_eq!(s.eigenvalues, vec![9.0; 5]);
    }

    #[test]
    fn tc_symmetric_spectrum() {
        let p = ClassParams::new(ClassId::QMinus2, r(1), q(1, 2));
        let t = tc(1, 1);
        let s = tavis_cummings_matrix(&p, &t).unwrap();
        assert_eq!(s.eigenvalues.len(), 3);
        assert!(spectral_asymmetry(&s, &t) < 1e-12);
        assert!((s.eigenvalues[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tc_rejects_other_classes() {
        let p = ClassParams::new(ClassId::QMinus11, r(1), r(1));
        assert!(tavis_cummings_matrix(&p, &tc(1, 1)).is_err());
        assert!(TcParams::new(r(0), r(1)).is_err());
    }

    #[test]
    fn x_generators() {
        for (j, l) in [(q(1, 2), q(1, 4)), (r(0), r(0)), (r(1), r(0)), (r(3), q(5, 2))] {
            let p = ClassParams::new(ClassId::QMinus2, j, l);
            assert!(x_generator_check(&p).unwrap().passed, "{p}");
        }
    }

    #[test]
    fn fermion() {
        let d = deformed_oscillator(&ClassParams::new(ClassId::QMinus11, r(1), r(1))).unwrap();
        assert_eq!(d.n_diag, vec![r(0), r(1)]);
        assert_eq!(d.a_entries, vec![SqrtRational::one()]);
        assert_eq!(d.f, Polynomial::new(vec![r(1), q(-1, 2), q(-3, 2)]));
        assert!(d.passed);
    }

    #[test]
    fn oscillator_small_cases() {
        let d = deformed_oscillator(&ClassParams::new(ClassId::QMinus11, q(1, 2), q(1, 4))).unwrap();
        assert_eq!(d.n_diag.len(), 1);
        assert!(d.a_entries.is_empty());

        let d = deformed_oscillator(&ClassParams::new(ClassId::QMinus11, q(1, 2), q(3, 4))).unwrap();
        assert_eq!(d.n_diag, vec![q(-1, 4), q(3, 4)]);
        assert_eq!(d.normalizer, q(17, 16));
        // entry² = 2k * 1 * (2l - k) / norm = 16/17
        assert_eq!(d.a_entries[0].square(), q(16, 17));
        assert!(d.passed);
    }
}
