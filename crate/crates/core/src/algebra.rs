//! The abstract quadratic algebra `[Q0, Q±] = ±Q±`, `[Q+, Q-] = a Q0² + b Q0 + c`,
//! its Casimir correction, and the four Jordan–Schwinger-type classes built
//! from su(2) or su(1,1) plus one extra oscillator.
//!
//! In the four classes `(a, b, c)` are central: they depend on the eigenvalue
//! `l` of ℒ and on `j(j+1)` (eigenvalue of 𝒥) or `k(1-k)` (eigenvalue of 𝒦).
//! [`ClassParams`] pins both, which fixes one irreducible representation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{q, sqrt_exact, Rational};
use crate::poly::Polynomial;

/// Structure constants `(a, b, c)` of `[Q+, Q-] = a Q0² + b Q0 + c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticAlgebraSpec {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl QuadraticAlgebraSpec {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        QuadraticAlgebraSpec { a, b, c }
    }

    pub fn su2() -> Self {
        QuadraticAlgebraSpec::new(Rational::zero(), Rational::from(2), Rational::zero())
    }

    pub fn su11() -> Self {
        QuadraticAlgebraSpec::new(Rational::zero(), Rational::from(-2), Rational::zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassId {
    #[serde(rename = "su2")]
    Su2,
    #[serde(rename = "su11")]
    Su11,
    #[serde(rename = "Q-2")]
    QMinus2,
    #[serde(rename = "Q+2")]
    QPlus2,
    #[serde(rename = "Q-11")]
    QMinus11,
    #[serde(rename = "Q+11")]
    QPlus11,
}

impl ClassId {
    pub const QUADRATIC: [ClassId; 4] = [
        ClassId::QMinus2,
        ClassId::QPlus2,
        ClassId::QMinus11,
        ClassId::QPlus11,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ClassId::Su2 => "su2",
            ClassId::Su11 => "su11",
            ClassId::QMinus2 => "Q-2",
            ClassId::QPlus2 => "Q+2",
            ClassId::QMinus11 => "Q-11",
            ClassId::QPlus11 => "Q+11",
        }
    }

    /// Built on su(2), so the spin label is `j`; otherwise it is `k`.
    pub fn is_compact(self) -> bool {
        matches!(self, ClassId::Su2 | ClassId::QMinus2 | ClassId::QPlus2)
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ClassId::Su11 | ClassId::QPlus11)
    }

    pub fn spin_symbol(self) -> &'static str {
        if self.is_compact() {
            "j"
        } else {
            "k"
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "su2" => Ok(ClassId::Su2),
            "su11" => Ok(ClassId::Su11),
            "Q-2" => Ok(ClassId::QMinus2),
            "Q+2" => Ok(ClassId::QPlus2),
            "Q-11" => Ok(ClassId::QMinus11),
            "Q+11" => Ok(ClassId::QPlus11),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown class {other:?}; expected su2|su11|Q-2|Q+2|Q-11|Q+11"),
            }),
        }
    }
}

/// One irreducible representation: class, spin label (`j` or `k`) and the
/// eigenvalue `l` of ℒ. For su(2) and su(1,1) `l` is tied to the spin by the
/// two-mode realization (`j + 1/2` and `k - 1/2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassParams {
    pub class: ClassId,
    pub spin: Rational,
    pub l: Rational,
}

impl ClassParams {
    pub fn new(class: ClassId, spin: Rational, l: Rational) -> Self {
        ClassParams { class, spin, l }
    }

    pub fn su2(j: Rational) -> Self {
        let l = &j + q(1, 2);
        ClassParams::new(ClassId::Su2, j, l)
    }

    pub fn su11(k: Rational) -> Self {
        let l = &k - q(1, 2);
        ClassParams::new(ClassId::Su11, k, l)
    }

    /// Validates and turns a failure into [`Error::InvalidParams`].
    pub fn require(&self, mode: Mode) -> Result<Validity> {
        let v = validate_params(self, mode);
        if v.valid {
            Ok(v)
        } else {
            Err(Error::InvalidParams(v.diagnostic))
        }
    }

    /// `j(j+1)` for the su(2)-based classes, `k(1-k)` otherwise.
    pub fn central_casimir(&self) -> Rational {
        let s = &self.spin;
        if self.class.is_compact() {
            s * &(s + Rational::one())
        } else {
            s * &(Rational::one() - s)
        }
    }
}

impl fmt::Display for ClassParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}={} l={}",
            self.class,
            self.class.spin_symbol(),
            self.spin,
            self.l
        )
    }
}

/// Strict mode admits only the Fock-realizable lattices; extended mode also
/// accepts any rational `k > 0` for the su(1,1)-based classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Strict,
    Extended,
}

/// The two families of Q⁻(2) irreps: `2l - j >= 0` (dimension `2j+1`) and
/// `2l - j < 0` (dimension `j + 2l + 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Q2Case {
    #[serde(rename = "I")]
    CaseI,
    #[serde(rename = "II")]
    CaseII,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validity {
    pub valid: bool,
    pub case: Option<Q2Case>,
    /// Set for rational `k` outside {1/2, 1, 3/2, ...}: beyond the
    /// Fock-realizable set.
    pub extended: bool,
    pub diagnostic: String,
}

impl Validity {
    fn ok(case: Option<Q2Case>, extended: bool) -> Self {
        let diagnostic = if extended {
            "valid (extended: k beyond the Fock-realizable set)".to_string()
        } else {
            "valid".to_string()
        };
        Validity {
            valid: true,
            case,
            extended,
            diagnostic,
        }
    }

    fn fail(diagnostic: String) -> Self {
        Validity {
            valid: false,
            case: None,
            extended: false,
            diagnostic,
        }
    }
}

/// `f(x) = a x² + b x + c`
pub fn structure_function(spec: &QuadraticAlgebraSpec) -> Polynomial {
    Polynomial::new(vec![spec.c.clone(), spec.b.clone(), spec.a.clone()])
}

/// The polynomial `p` with `p(x+1) - p(x) = f(x)` and `p(0) = -f(0)`, so that
/// `C = Q+ Q- + p(Q0)` is central whenever `[Q+, Q-] = f(Q0)`.
///
/// Works for any degree: `f` is expanded in the binomial basis
/// `f(x) = Σ Δⁱf(0) C(x, i)`, whose antidifference is `Σ Δⁱf(0) C(x, i+1)`.
pub fn casimir_correction(f: &Polynomial) -> Polynomial {
    let Some(deg) = f.degree() else {
        return Polynomial::zero();
    };
    // Δⁱ f(0) from the table of values f(0..=deg)
    let mut diffs: Vec<Rational> = (0..=deg).map(|x| f.eval(&Rational::from(x))).collect();
    let mut newton = Vec::with_capacity(deg + 1);
    for _ in 0..=deg {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut p = Polynomial::constant(-f.eval(&Rational::zero()));
    // running binomial C(x, m), starting from C(x, 1) = x
    let mut binom = Polynomial::new(vec![Rational::zero(), Rational::one()]);
    for (i, c) in newton.iter().enumerate() {
        p = &p + &binom.scale(c);
        let m = i + 1;
        let factor = Polynomial::new(vec![-Rational::from(m), Rational::one()])
            .scale(&Rational::new(1, m as i64 + 1));
        binom = &binom * &factor;
    }
    p
}

pub fn class_structure_constants(params: &ClassParams) -> Result<QuadraticAlgebraSpec> {
    params.require(Mode::Extended)?;
    Ok(structure_constants_unchecked(params))
}

/// The `(a, b, c)` map of each class, without validating the lattice.
pub fn structure_constants_unchecked(params: &ClassParams) -> QuadraticAlgebraSpec {
    let l = &params.l;
    let one = Rational::one();
    let two = Rational::from(2);
    let cas = params.central_casimir();
    let l_lp1 = l * &(l + &one);
    let l_lm1 = l * &(l - &one);
    match params.class {
        ClassId::Su2 => QuadraticAlgebraSpec::su2(),
        ClassId::Su11 => QuadraticAlgebraSpec::su11(),
        ClassId::QMinus2 => QuadraticAlgebraSpec::new(
            Rational::from(-3),
            -(&two * l - &one),
            cas + l_lp1,
        ),
        ClassId::QPlus2 => QuadraticAlgebraSpec::new(
            Rational::from(3),
            &two * l + &one,
            -cas - l_lm1,
        ),
        ClassId::QMinus11 => QuadraticAlgebraSpec::new(
            Rational::from(3),
            &two * l - &one,
            cas - l_lp1,
        ),
        ClassId::QPlus11 => QuadraticAlgebraSpec::new(
            Rational::from(-3),
            -(&two * l + &one),
            l_lm1 - cas,
        ),
    }
}

fn check_spin_k(k: &Rational, mode: Mode) -> std::result::Result<bool, String> {
    if !k.is_positive() {
        return Err(format!("k = {k} must be positive"));
    }
    if k.is_nonneg_half_integer() {
        Ok(false)
    } else if mode == Mode::Extended {
        Ok(true)
    } else {
        Err(format!(
            "k = {k} is not one of 1/2, 1, 3/2, ... (strict mode)"
        ))
    }
}

fn is_nonneg_int(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}

/// Per-class lattice predicate.
pub fn validate_params(params: &ClassParams, mode: Mode) -> Validity {
    let s = &params.spin;
    let l = &params.l;
    let two = Rational::from(2);
    let half = q(1, 2);
    let sym = params.class.spin_symbol();

    if params.class.is_compact() && !s.is_nonneg_half_integer() {
        return Validity::fail(format!("j = {s} is not in {{0, 1/2, 1, ...}}"));
    }
    let extended = if params.class.is_compact() {
        false
    } else {
        match check_spin_k(s, mode) {
            Ok(ext) => ext,
            Err(msg) => return Validity::fail(msg),
        }
    };

    match params.class {
        ClassId::Su2 => {
            let expect = s + &half;
            if *l == expect {
                Validity::ok(None, false)
            } else {
                Validity::fail(format!("su2 requires l = j + 1/2 = {expect}, got {l}"))
            }
        }
        ClassId::Su11 => {
            let expect = s - &half;
            if *l == expect {
                Validity::ok(None, extended)
            } else {
                Validity::fail(format!("su11 requires l = k - 1/2 = {expect}, got {l}"))
            }
        }
        ClassId::QMinus2 => {
            let t1 = &two * l - s;
            let t2 = &two * l + s;
            if is_nonneg_int(&t1) {
                Validity::ok(Some(Q2Case::CaseI), false)
            } else if t1.is_negative() && is_nonneg_int(&t2) {
                Validity::ok(Some(Q2Case::CaseII), false)
            } else {
                Validity::fail(format!(
                    "Q-2 needs 2l-j in {{0,1,2,...}} (case I) or 2l+j in {{0,1,2,...}} with 2l-j < 0 (case II); \
                     got 2l-j = {t1}, 2l+j = {t2}"
                ))
            }
        }
        ClassId::QPlus2 => {
            let t = -(&two * l + s);
            if is_nonneg_int(&t) {
                Validity::ok(None, false)
            } else {
                Validity::fail(format!(
                    "Q+2 needs -(2l+j) in {{0,1,2,...}}; got 2l+j = {}",
                    -t
                ))
            }
        }
        ClassId::QMinus11 => {
            let t = &two * l - s;
            if is_nonneg_int(&t) {
                Validity::ok(None, extended)
            } else {
                Validity::fail(format!("Q-11 needs 2l-{sym} in {{0,1,2,...}}; got {t}"))
            }
        }
        ClassId::QPlus11 => {
            let t = s - &two * l;
            if is_nonneg_int(&t) {
                Validity::ok(None, extended)
            } else {
                Validity::fail(format!("Q+11 needs {sym}-2l in {{0,1,2,...}}; got {t}"))
            }
        }
    }
}

/// Irrep dimension; infinite for Q⁺(1,1) and the su(1,1) series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

impl Dimension {
    pub fn finite(self) -> Option<u64> {
        match self {
            Dimension::Finite(d) => Some(d),
            Dimension::Infinite => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(d) => serializer.serialize_u64(*d),
            Dimension::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

pub fn dimension_of(params: &ClassParams) -> Result<Dimension> {
    let v = params.require(Mode::Extended)?;
    let s = &params.spin;
    let l = &params.l;
    let two = Rational::from(2);
    let one = Rational::one();
    let count = |x: Rational| -> Dimension {
        Dimension::Finite(x.to_nonneg_integer().expect("validated lattice point"))
    };
    Ok(match params.class {
        ClassId::Su2 | ClassId::QPlus2 => count(&two * s + &one),
        ClassId::QMinus2 => match v.case {
            Some(Q2Case::CaseII) => count(s + &two * l + &one),
            _ => count(&two * s + &one),
        },
        ClassId::QMinus11 => count(&two * l - s + &one),
        ClassId::Su11 | ClassId::QPlus11 => Dimension::Infinite,
    })
}

/// The closed-form Casimir values as quoted for each class:
/// `(l+1)[j(j+1) - l(l-1)]`, `(1-l)[j(j+1) - l(l+1)]`,
/// `(l+1)[k(1-k) + l(l-1)]`, `l(l - k²)`; `j(j+1)` and `k(1-k)` for su(2)
/// and su(1,1).
///
/// Only the Q⁺(2) form coincides with the eigenvalue of
/// `Q+ Q- + p(Q0)` for the normalization of [`casimir_correction`]; see
/// [`casimir_eigenvalue`] for the value that the matrices actually carry.
pub fn casimir_value(params: &ClassParams) -> Result<Rational> {
    params.require(Mode::Extended)?;
    let s = &params.spin;
    let l = &params.l;
    let one = Rational::one();
    let cas = params.central_casimir();
    Ok(match params.class {
        ClassId::Su2 | ClassId::Su11 => cas,
        ClassId::QMinus2 => (l + &one) * (cas - l * &(l - &one)),
        ClassId::QPlus2 => (&one - l) * (cas - l * &(l + &one)),
        ClassId::QMinus11 => (l + &one) * (cas + l * &(l - &one)),
        ClassId::QPlus11 => l * &(l - s * s),
    })
}

/// Eigenvalue of `C = Q+ Q- + p(Q0)` (with `p` from [`casimir_correction`])
/// on the irrep, i.e. `p` evaluated at the lowest `Q0` eigenvalue:
/// `l(j-l)(j+l+1)`, `(1-l)(j-l)(j+l+1)`, `l(k+l)(l+1-k)`, `(k+l)(l-1)(k-l-1)`.
pub fn casimir_eigenvalue(params: &ClassParams) -> Result<Rational> {
    params.require(Mode::Extended)?;
    let s = &params.spin;
    let l = &params.l;
    let one = Rational::one();
    Ok(match params.class {
        ClassId::Su2 | ClassId::Su11 => params.central_casimir(),
        ClassId::QMinus2 => l * &(s - l) * (s + l + &one),
        ClassId::QPlus2 => (&one - l) * (s - l) * (s + l + &one),
        ClassId::QMinus11 => l * &(s + l) * (l + &one - s),
        ClassId::QPlus11 => (s + l) * (l - &one) * (s - l - &one),
    })
}

/// Lowest eigenvalue of `Q0` on the irrep.
pub fn lowest_weight(params: &ClassParams) -> Rational {
    let s = &params.spin;
    let l = &params.l;
    match params.class {
        ClassId::Su2 => -s,
        ClassId::Su11 => s.clone(),
        ClassId::QMinus2 | ClassId::QPlus2 => -(s + l),
        ClassId::QMinus11 | ClassId::QPlus11 => s - l,
    }
}

/// The class lattice integer: `2l+j`, `-(2l+j)`, `2l-k`, `k-2l` (zero for su).
pub fn lattice_index(params: &ClassParams) -> Rational {
    let two = Rational::from(2);
    let s = &params.spin;
    let l = &params.l;
    match params.class {
        ClassId::Su2 | ClassId::Su11 => Rational::zero(),
        ClassId::QMinus2 => &two * l + s,
        ClassId::QPlus2 => -(&two * l + s),
        ClassId::QMinus11 => &two * l - s,
        ClassId::QPlus11 => s - &two * l,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LieReading {
    Su2,
    Su11,
    /// `a = 0` but not normalized as su(2) or su(1,1).
    Linear,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ReadingStatus {
    Valid {
        extended: bool,
        case: Option<Q2Case>,
    },
    /// Real parameters that miss the lattice.
    Invalid { diagnostic: String },
    /// No admissible real (or rational) root.
    Rejected { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interpretation {
    pub class: ClassId,
    pub l: Rational,
    /// Required value of `j(j+1)` or `k(1-k)`.
    pub central: Rational,
    pub params: Option<ClassParams>,
    #[serde(flatten)]
    pub status: ReadingStatus,
}

impl Interpretation {
    pub fn is_valid(&self) -> bool {
        matches!(self.status, ReadingStatus::Valid { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub spec: QuadraticAlgebraSpec,
    pub lie: Option<LieReading>,
    pub interpretations: Vec<Interpretation>,
}

impl Identification {
    pub fn valid(&self) -> impl Iterator<Item = &Interpretation> {
        self.interpretations.iter().filter(|i| i.is_valid())
    }
}

fn reading(class: ClassId, l: Rational, central: Rational, spin: Rational) -> Interpretation {
    let params = ClassParams::new(class, spin, l.clone());
    let v = validate_params(&params, Mode::Extended);
    let status = if v.valid {
        ReadingStatus::Valid {
            extended: v.extended,
            case: v.case,
        }
    } else {
        ReadingStatus::Invalid {
            diagnostic: v.diagnostic,
        }
    };
    Interpretation {
        class,
        l,
        central,
        params: Some(params),
        status,
    }
}

fn rejected(class: ClassId, l: Rational, central: Rational, reason: String) -> Interpretation {
    Interpretation {
        class,
        l,
        central,
        params: None,
        status: ReadingStatus::Rejected { reason },
    }
}

/// Solves `j(j+1) = v` for the root `j >= 0`.
fn solve_j(class: ClassId, l: Rational, v: Rational) -> Interpretation {
    let disc = Rational::from(4) * &v + Rational::one();
    if disc.is_negative() {
        return rejected(class, l, v.clone(), format!("j(j+1) = {v} has no real j"));
    }
    let root = sqrt_exact(&disc).expect("nonnegative");
    let Some(s) = root.as_rational() else {
        return rejected(
            class,
            l,
            v,
            format!("j = (-1 + {root})/2 is irrational"),
        );
    };
    let j = (s - &Rational::one()) / Rational::from(2);
    if j.is_negative() {
        return rejected(class, l, v.clone(), format!("j(j+1) = {v} has no root j >= 0"));
    }
    reading(class, l, v, j)
}

/// Solves `k(1-k) = v`, reporting each real root (`k` and `1-k`).
fn solve_k(class: ClassId, l: Rational, v: Rational) -> Vec<Interpretation> {
    let disc = Rational::one() - Rational::from(4) * &v;
    if disc.is_negative() {
        return vec![rejected(class, l, v.clone(), format!("k(1-k) = {v} has no real k"))];
    }
    let root = sqrt_exact(&disc).expect("nonnegative");
    let Some(s) = root.as_rational() else {
        return vec![rejected(
            class,
            l,
            v,
            format!("k = (1 ± {root})/2 is irrational"),
        )];
    };
    let two = Rational::from(2);
    let mut roots = vec![(Rational::one() + s) / &two];
    if !s.is_zero() {
        roots.push((Rational::one() - s) / &two);
    }
    roots
        .into_iter()
        .map(|k| {
            if k.is_positive() {
                reading(class, l.clone(), v.clone(), k)
            } else {
                rejected(class, l.clone(), v.clone(), format!("root k = {k} is not positive"))
            }
        })
        .collect()
}

/// Inverts the class maps: for `a = ±3`, solves `l` from `b` and then the
/// quadratic for `j` or `k` from `c`, for both classes sharing that `a`.
pub fn identify_class(spec: &QuadraticAlgebraSpec) -> Identification {
    let one = Rational::one();
    let two = Rational::from(2);
    let mut out = Identification {
        spec: spec.clone(),
        lie: None,
        interpretations: Vec::new(),
    };
    let QuadraticAlgebraSpec { a, b, c } = spec;
    if a.is_zero() {
        out.lie = Some(if *spec == QuadraticAlgebraSpec::su2() {
            LieReading::Su2
        } else if *spec == QuadraticAlgebraSpec::su11() {
            LieReading::Su11
        } else {
            LieReading::Linear
        });
        return out;
    }
    if *a == Rational::from(-3) {
        // Q-2: b = -(2l-1), c = j(j+1) + l(l+1)
        let l = (&one - b) / &two;
        let v = c - &(&l * &(&l + &one));
        out.interpretations.push(solve_j(ClassId::QMinus2, l, v));
        // Q+11: b = -(2l+1), c = l(l-1) - k(1-k)
        let l = -(b + &one) / &two;
        let v = &(&l * &(&l - &one)) - c;
        out.interpretations.extend(solve_k(ClassId::QPlus11, l, v));
    } else if *a == Rational::from(3) {
        // Q+2: b = 2l+1, c = -j(j+1) - l(l-1)
        let l = (b - &one) / &two;
        let v = -c - &(&l * &(&l - &one));
        out.interpretations.push(solve_j(ClassId::QPlus2, l, v));
        // Q-11: b = 2l-1, c = k(1-k) - l(l+1)
        let l = (b + &one) / &two;
        let v = c + &(&l * &(&l + &one));
        out.interpretations.extend(solve_k(ClassId::QMinus11, l, v));
    }
    out
}

/// Sweep box: spin up to `spin_max` (half-integer steps) and the class
/// lattice integer (see [`lattice_index`]) up to `lattice_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamBox {
    pub spin_max: Rational,
    pub lattice_max: u64,
}

impl ParamBox {
    pub fn new(spin_max: Rational, lattice_max: u64) -> Self {
        ParamBox {
            spin_max,
            lattice_max,
        }
    }
}

/// All strict-mode params in the box, ordered by spin and then by lattice
/// integer.
pub fn enumerate_params(class: ClassId, bounds: &ParamBox) -> Vec<ClassParams> {
    let half = q(1, 2);
    let two = Rational::from(2);
    let mut spin = if class.is_compact() {
        Rational::zero()
    } else {
        half.clone()
    };
    let mut out = Vec::new();
    while spin <= bounds.spin_max {
        match class {
            ClassId::Su2 => out.push(ClassParams::su2(spin.clone())),
            ClassId::Su11 => out.push(ClassParams::su11(spin.clone())),
            _ => {
                for t in 0..=bounds.lattice_max {
                    let t = Rational::from(t);
                    let l = match class {
                        ClassId::QMinus2 => (&t - &spin) / &two,
                        ClassId::QPlus2 => -(&t + &spin) / &two,
                        ClassId::QMinus11 => (&t + &spin) / &two,
                        _ => (&spin - &t) / &two,
                    };
                    out.push(ClassParams::new(class, spin.clone(), l));
                }
            }
        }
        spin += &half;
    }
    debug_assert!(out.iter().all(|p| validate_params(p, Mode::Strict).valid));
    out
}
