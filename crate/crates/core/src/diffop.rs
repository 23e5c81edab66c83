//! One-variable differential realizations `Σ p_q(z) D^q` acting on weighted
//! monomial bases `z^n / sqrt(w_n)`, and their matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::BigInt;
use serde::Serialize;

use crate::algebra::{dimension_of, ClassId, ClassParams, Mode};
use crate::error::{Error, Result};
use crate::exact::{sqrt_exact, Rational, SqrtRational};
use crate::expr::Cursor;
use crate::poly::Polynomial;
use crate::rep::{build_rep, TripleRep};

/// `Σ_q p_q(z) d^q/dz^q`, keyed by derivative order; zero polynomials are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOperator {
    terms: BTreeMap<usize, Polynomial>,
}

impl DiffOperator {
    pub fn zero() -> Self {
        DiffOperator::default()
    }

    pub fn new(terms: impl IntoIterator<Item = (Polynomial, usize)>) -> Self {
        let mut op = DiffOperator::zero();
        for (p, order) in terms {
            op.add_term(p, order);
        }
        op
    }

    /// `c z^k D^q`
    pub fn monomial(c: Rational, k: usize, q: usize) -> Self {
        DiffOperator::new([(Polynomial::monomial(c, k), q)])
    }

    fn add_term(&mut self, p: Polynomial, order: usize) {
        let sum = match self.terms.remove(&order) {
            Some(old) => &old + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(order, sum);
        }
    }

    pub fn add(&self, other: &DiffOperator) -> Self {
        let mut out = self.clone();
        for (&q, p) in &other.terms {
            out.add_term(p.clone(), q);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.terms.iter().map(|(&q, p)| (q, p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Image of `z^n`.
    pub fn apply(&self, n: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (&q, p) in &self.terms {
            if q > n {
                continue;
            }
            let falling: u64 = ((n - q + 1)..=n).map(|k| k as u64).product();
            let shifted = Polynomial::monomial(Rational::from(falling), n - q);
            out = &out + &(p * &shifted);
        }
        out
    }

    pub fn apply_poly(&self, f: &Polynomial) -> Polynomial {
        f.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Polynomial::zero(), |acc, (n, c)| &acc + &self.apply(n).scale(c))
    }
}

impl fmt::Display for DiffOperator {
    /// Highest derivative first, then highest power of `z`:
    /// `z^3*D^2 - 7/2*z^2*D + 3*z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&q, p) in self.terms.iter().rev() {
            for (k, c) in p.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                if first {
                    if c.is_negative() {
                        f.write_str("-")?;
                    }
                } else {
                    f.write_str(if c.is_negative() { " - " } else { " + " })?;
                }
                first = false;
                let mut parts = Vec::new();
                let mag = c.abs();
                if mag != Rational::one() || (k == 0 && q == 0) {
                    parts.push(mag.to_string());
                }
                match k {
                    0 => {}
                    1 => parts.push("z".to_string()),
                    _ => parts.push(format!("z^{k}")),
                }
                match q {
                    0 => {}
                    1 => parts.push("D".to_string()),
                    _ => parts.push(format!("D^{q}")),
                }
                f.write_str(&parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for DiffOperator {
    type Err = Error;

    /// Terms `[coef*][z[^k]][*][D[^q]]` joined by `+`/`-`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        if cur.at_end() {
            return cur.err("empty operator");
        }
        let mut op = DiffOperator::zero();
        let mut first = true;
        while !cur.at_end() {
            let negative = cur.sign(first)?;
            first = false;
            let start = cur.pos();
            let mut c = Rational::one();
            let mut seen = false;
            if cur.starts_number() {
                c = cur.rational()?;
                seen = true;
                if !cur.eat('*') {
                    op.add_term(Polynomial::constant(if negative { -c } else { c }), 0);
                    continue;
                }
            }
            let mut k = 0;
            if cur.eat('z') {
                k = if cur.eat('^') { cur.uint()? } else { 1 };
                seen = true;
                cur.eat('*');
            }
            let mut q = 0;
            if cur.eat('D') {
                q = if cur.eat('^') { cur.uint()? } else { 1 };
                seen = true;
            }
            if !seen || (k == 0 && q == 0) {
                return Err(Error::Parse {
                    pos: start,
                    msg: "expected a rational, z or D".into(),
                });
            }
            if negative {
                c = -c;
            }
            op.add_term(Polynomial::monomial(c, k), q);
        }
        Ok(op)
    }
}

/// `(Q0, Q+, Q-)` as differential operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffRealization {
    pub q0: DiffOperator,
    pub qplus: DiffOperator,
    pub qminus: DiffOperator,
}

fn z_d(c: Rational, k: usize, q: usize) -> DiffOperator {
    DiffOperator::monomial(c, k, q)
}

fn sum(ops: &[DiffOperator]) -> DiffOperator {
    ops.iter().fold(DiffOperator::zero(), |acc, o| acc.add(o))
}

/// Strict-mode parameters only; the rational-`k` extensions need gamma
/// functions in the weights and are left to `build_rep`.
fn require_strict(params: &ClassParams) -> Result<()> {
    let v = params.require(Mode::Extended)?;
    if v.extended {
        return Err(Error::InvalidParams(format!(
            "{params}: differential realization needs k in {{1/2, 1, 3/2, ...}}; use build_rep for extended k"
        )));
    }
    Ok(())
}

pub fn realization_for(params: &ClassParams) -> Result<DiffRealization> {
    require_strict(params)?;
    let s = &params.spin;
    let l = &params.l;
    let one = Rational::one();
    let two = Rational::from(2);
    let three = Rational::from(3);
    let number = z_d(one.clone(), 1, 1);
    let shifted = |c: Rational| sum(&[number.clone(), z_d(c, 0, 0)]);
    let r = match params.class {
        ClassId::Su2 => DiffRealization {
            q0: shifted(-s),
            qplus: sum(&[z_d(-&one, 2, 1), z_d(&two * s, 1, 0)]),
            qminus: z_d(one.clone(), 0, 1),
        },
        ClassId::Su11 => DiffRealization {
            q0: shifted(s.clone()),
            qplus: z_d(one.clone(), 1, 0),
            qminus: sum(&[z_d(one.clone(), 1, 2), z_d(&two * s, 0, 1)]),
        },
        ClassId::QMinus2 => DiffRealization {
            q0: shifted(-(s + l)),
            qplus: sum(&[
                z_d(one.clone(), 3, 2),
                z_d(-(&two * l + &three * s - &one), 2, 1),
                z_d(&two * s * (&two * l + s), 1, 0),
            ]),
            qminus: z_d(one.clone(), 0, 1),
        },
        ClassId::QPlus2 => DiffRealization {
            q0: shifted(-(s + l)),
            qplus: sum(&[z_d(-&one, 2, 1), z_d(&two * s, 1, 0)]),
            qminus: sum(&[
                z_d(one.clone(), 1, 2),
                z_d(-(&two * l + s - &one), 0, 1),
            ]),
        },
        ClassId::QMinus11 => DiffRealization {
            q0: shifted(s - l),
            qplus: sum(&[z_d(-&one, 2, 1), z_d(&two * l - s, 1, 0)]),
            qminus: sum(&[z_d(one.clone(), 1, 2), z_d(&two * s, 0, 1)]),
        },
        ClassId::QPlus11 => DiffRealization {
            q0: shifted(s - l),
            qplus: z_d(one.clone(), 1, 0),
            qminus: sum(&[
                z_d(one.clone(), 2, 3),
                z_d(&three * s - &two * l + &two, 1, 2),
                z_d(&two * s * s - Rational::from(4) * s * l + &two * s, 0, 1),
            ]),
        },
    };
    Ok(r)
}

/// Monomials `z^0 .. z^(size-1)` with squared normalizations `weight_sq[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedBasis {
    pub params: ClassParams,
    pub size: usize,
    /// Cut from an infinite basis: images past the top are dropped.
    pub truncated: bool,
    pub weight_sq: Vec<Rational>,
}

struct Factorials(Vec<BigInt>);

impl Factorials {
    fn new() -> Self {
        Factorials(vec![BigInt::from(1)])
    }

    fn get(&mut self, n: i64) -> Result<BigInt> {
        let n = usize::try_from(n)
            .map_err(|_| Error::Domain(format!("factorial of negative {n}")))?;
        while self.0.len() <= n {
            let k = self.0.len();
            let next = &self.0[k - 1] * BigInt::from(k);
            self.0.push(next);
        }
        Ok(self.0[n].clone())
    }
}

fn as_int(x: &Rational) -> Result<i64> {
    x.to_i64()
        .filter(|_| x.is_integer())
        .ok_or_else(|| Error::Domain(format!("{x} is not an integer factorial argument")))
}

/// `nmax` is required for the infinite classes; the basis then holds
/// `nmax + 2` monomials so that the lowering operators stay exact on the
/// compared block.
pub fn weighted_basis(params: &ClassParams, nmax: Option<usize>) -> Result<WeightedBasis> {
    require_strict(params)?;
    let (size, truncated) = match dimension_of(params)?.finite() {
        Some(d) => (d as usize, false),
        None => (
            nmax.ok_or_else(|| Error::MissingNmax(params.class.to_string()))? + 2,
            true,
        ),
    };
    let two = Rational::from(2);
    let s2 = as_int(&(&two * &params.spin))?;
    let lattice = |x: Rational| as_int(&x);
    let l = &params.l;
    let s = &params.spin;
    // factorial arguments as affine functions a + n * sign
    let args: Vec<(i64, i64)> = match params.class {
        ClassId::Su2 => vec![(0, 1), (s2, -1)],
        ClassId::Su11 => vec![(s2 - 1, 1), (0, 1)],
        ClassId::QMinus2 => vec![(0, 1), (s2, -1), (lattice(&two * l + s)?, -1)],
        ClassId::QPlus2 => vec![(0, 1), (s2, -1), (lattice(-(&two * l + s))?, 1)],
        ClassId::QMinus11 => vec![(s2 - 1, 1), (0, 1), (lattice(&two * l - s)?, -1)],
        ClassId::QPlus11 => vec![(s2 - 1, 1), (0, 1), (lattice(s - &two * l)?, 1)],
    };
    let mut fact = Factorials::new();
    let mut weight_sq = Vec::with_capacity(size);
    for n in 0..size as i64 {
        let mut denom = BigInt::from(1);
        for &(a, sign) in &args {
            denom *= fact.get(a + sign * n)?;
        }
        weight_sq.push(Rational::new(BigInt::from(1), denom));
    }
    Ok(WeightedBasis {
        params: params.clone(),
        size,
        truncated,
        weight_sq,
    })
}

/// Row-major exact matrix of an operator in a weighted basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffMatrix {
    pub entries: Vec<Vec<SqrtRational>>,
    /// Columns of a truncated basis whose image left the span.
    pub escaped_columns: Vec<usize>,
}

/// `M[m][n] = [z^m] op(z^n) * sqrt(w_n / w_m)`.
#[allow(clippy::needless_range_loop)]
pub fn matrix_in_basis(op: &DiffOperator, basis: &WeightedBasis) -> Result<DiffMatrix> {
    let size = basis.size;
    let mut entries = vec![vec![SqrtRational::zero(); size]; size];
    let mut escaped_columns = Vec::new();
    for n in 0..size {
        let image = op.apply(n);
        for (m, c) in image.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if m >= size {
                if basis.truncated {
                    if escaped_columns.last() != Some(&n) {
                        escaped_columns.push(n);
                    }
                    continue;
                }
                return Err(Error::BasisEscape { degree: m });
            }
            let ratio = &basis.weight_sq[n] / &basis.weight_sq[m];
            entries[m][n] = sqrt_exact(&ratio)?.scale(c);
        }
    }
    escaped_columns.dedup();
    Ok(DiffMatrix {
        entries,
        escaped_columns,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub params: ClassParams,
    /// Leading block compared against `build_rep`.
    pub rows_compared: usize,
    pub basis_size: usize,
    pub mismatches: Vec<String>,
    pub passed: bool,
}

fn compare(
    name: &str,
    m: &DiffMatrix,
    rows: usize,
    want: impl Fn(usize, usize) -> SqrtRational,
    out: &mut Vec<String>,
) {
    for r in 0..rows {
        for c in 0..rows {
            let got = &m.entries[r][c];
            let exp = want(r, c);
            if *got != exp {
                out.push(format!("{name}[{r}][{c}]: diffop {got}, matrix rep {exp}"));
            }
        }
    }
}

/// Entrywise comparison of the differential realization with `build_rep`.
pub fn verify_equivalence(params: &ClassParams, nmax: Option<usize>) -> Result<EquivalenceReport> {
    let rep: TripleRep = build_rep(params, nmax)?;
    let basis = weighted_basis(params, nmax)?;
    let real = realization_for(params)?;
    let rows = rep.dim;
    let zero = SqrtRational::zero;
    let mut mismatches = Vec::new();

    let m = matrix_in_basis(&real.q0, &basis)?;
    compare("Q0", &m, rows, |r, c| {
        if r == c {
            SqrtRational::from_rational(rep.q0_diag[r].clone())
        } else {
            zero()
        }
    }, &mut mismatches);
    let m = matrix_in_basis(&real.qplus, &basis)?;
    compare("Q+", &m, rows, |r, c| {
        if r == c + 1 {
            rep.qplus_sub[c].clone()
        } else {
            zero()
        }
    }, &mut mismatches);
    let m = matrix_in_basis(&real.qminus, &basis)?;
    compare("Q-", &m, rows, |r, c| {
        if c == r + 1 {
            rep.qminus_super[r].clone()
        } else {
            zero()
        }
    }, &mut mismatches);

    Ok(EquivalenceReport {
        params: params.clone(),
        rows_compared: rows,
        basis_size: basis.size,
        passed: mismatches.is_empty(),
        mismatches,
    })
}
