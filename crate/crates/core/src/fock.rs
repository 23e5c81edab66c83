//! Box-truncated multi-mode Fock spaces with exact ladder operators, the
//! two-mode Schwinger realizations and the three-mode realizations of the four
//! quadratic classes.
//!
//! Every operator remembers which basis columns are *inexact*: columns whose
//! true image had a component pushed past a cutoff, either directly or through
//! an intermediate factor of a product. Verifiers only trust exact columns.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::algebra::{dimension_of, ClassId, ClassParams, Mode};
use crate::error::{Error, Result};
use crate::exact::{q, Rational, SqrtRational};
use crate::rep::TripleRep;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FockSpace {
    cutoffs: Vec<u32>,
    strides: Vec<usize>,
}

impl FockSpace {
    /// Two or three modes; each cutoff is the largest kept occupation.
    pub fn new(cutoffs: &[u32]) -> Result<Self> {
        if !(2..=3).contains(&cutoffs.len()) {
            return Err(Error::Arity {
                expected: 3,
                actual: cutoffs.len(),
            });
        }
        // lexicographic: mode 0 most significant
        let mut strides = vec![1usize; cutoffs.len()];
        for m in (0..cutoffs.len() - 1).rev() {
            strides[m] = strides[m + 1] * (cutoffs[m + 1] as usize + 1);
        }
        Ok(FockSpace {
            cutoffs: cutoffs.to_vec(),
            strides,
        })
    }

    pub fn n_modes(&self) -> usize {
        self.cutoffs.len()
    }

    pub fn cutoffs(&self) -> &[u32] {
        &self.cutoffs
    }

    pub fn dim(&self) -> usize {
        self.cutoffs.iter().map(|&c| c as usize + 1).product()
    }

    pub fn contains(&self, occ: &[u32]) -> bool {
        occ.len() == self.n_modes() && occ.iter().zip(&self.cutoffs).all(|(n, c)| n <= c)
    }

    pub fn index(&self, occ: &[u32]) -> Option<usize> {
        self.contains(occ)
            .then(|| occ.iter().zip(&self.strides).map(|(&n, s)| n as usize * s).sum())
    }

    pub fn state(&self, index: usize) -> Vec<u32> {
        self.cutoffs
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| ((index / s) % (c as usize + 1)) as u32)
            .collect()
    }

    fn require_arity(&self, expected: usize) -> Result<()> {
        if self.n_modes() != expected {
            return Err(Error::Arity {
                expected,
                actual: self.n_modes(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for FockSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_occ(&self.cutoffs))
    }
}

fn fmt_occ(occ: &[u32]) -> String {
    let parts: Vec<String> = occ.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderKind {
    Raise,
    Lower,
}

/// Column-major sparse matrix over a [`FockSpace`]: `cols[c]` is the image of
/// basis state `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator {
    space: FockSpace,
    cols: Vec<BTreeMap<usize, SqrtRational>>,
    inexact: BTreeSet<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CooEntry {
    pub row: usize,
    pub col: usize,
    pub coeff: Rational,
    pub radicand: u64,
}

fn accumulate(col: &mut BTreeMap<usize, SqrtRational>, row: usize, v: SqrtRational) -> Result<()> {
    if v.is_zero() {
        return Ok(());
    }
    let sum = match col.get(&row) {
        Some(old) => old.add_same_class(&v)?,
        None => v,
    };
    if sum.is_zero() {
        col.remove(&row);
    } else {
        col.insert(row, sum);
    }
    Ok(())
}

impl SparseOperator {
    pub fn zero(space: &FockSpace) -> Self {
        SparseOperator {
            space: space.clone(),
            cols: vec![BTreeMap::new(); space.dim()],
            inexact: BTreeSet::new(),
        }
    }

    pub fn identity(space: &FockSpace) -> Self {
        SparseOperator::diagonal(space, |_| Rational::one())
    }

    pub fn diagonal(space: &FockSpace, value: impl Fn(&[u32]) -> Rational) -> Self {
        let mut op = SparseOperator::zero(space);
        for c in 0..space.dim() {
            let v = value(&space.state(c));
            if !v.is_zero() {
                op.cols[c].insert(c, SqrtRational::from_rational(v));
            }
        }
        op
    }

    /// `N_mode`
    pub fn number(space: &FockSpace, mode: usize) -> Result<Self> {
        check_mode(space, mode)?;
        Ok(SparseOperator::diagonal(space, |s| Rational::from(s[mode] as u64)))
    }

    pub fn space(&self) -> &FockSpace {
        &self.space
    }

    pub fn column(&self, c: usize) -> &BTreeMap<usize, SqrtRational> {
        &self.cols[c]
    }

    pub fn entry(&self, row: usize, col: usize) -> SqrtRational {
        self.cols[col]
            .get(&row)
            .cloned()
            .unwrap_or_else(SqrtRational::zero)
    }

    pub fn inexact_columns(&self) -> &BTreeSet<usize> {
        &self.inexact
    }

    pub fn is_exact_column(&self, c: usize) -> bool {
        !self.inexact.contains(&c)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(&k, v)| (k, v.scale(r)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        SparseOperator {
            space: self.space.clone(),
            cols,
            inexact: self.inexact.clone(),
        }
    }

    pub fn add(&self, other: &SparseOperator) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (c, col) in other.cols.iter().enumerate() {
            for (&r, v) in col {
                accumulate(&mut out.cols[c], r, v.clone())?;
            }
        }
        out.inexact.extend(other.inexact.iter().copied());
        Ok(out)
    }

    pub fn sub(&self, other: &SparseOperator) -> Result<Self> {
        self.add(&other.scale(&Rational::from(-1)))
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn mul(&self, other: &SparseOperator) -> Result<Self> {
        self.same_space(other)?;
        let mut out = SparseOperator::zero(&self.space);
        for (c, col) in other.cols.iter().enumerate() {
            let mut exact = other.is_exact_column(c);
            for (&k, v) in col {
                exact &= self.is_exact_column(k);
                for (&r, w) in &self.cols[k] {
                    accumulate(&mut out.cols[c], r, w.mul(v)?)?;
                }
            }
            if !exact {
                out.inexact.insert(c);
            }
        }
        Ok(out)
    }

    pub fn product(ops: &[&SparseOperator]) -> Result<Self> {
        let (first, rest) = ops.split_first().expect("nonempty product");
        rest.iter()
            .try_fold((*first).clone(), |acc, op| acc.mul(op))
    }

    pub fn commutator(&self, other: &SparseOperator) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Stored entries as a coordinate list, by column then row.
    pub fn to_coo(&self) -> Vec<CooEntry> {
        let mut out = Vec::with_capacity(self.nnz());
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, v) in col {
                out.push(CooEntry {
                    row: r,
                    col: c,
                    coeff: v.coeff().clone(),
                    radicand: v.radicand(),
                });
            }
        }
        out
    }

    fn same_space(&self, other: &SparseOperator) -> Result<()> {
        if self.space != other.space {
            return Err(Error::Arity {
                expected: self.space.n_modes(),
                actual: other.space.n_modes(),
            });
        }
        Ok(())
    }
}

fn check_mode(space: &FockSpace, mode: usize) -> Result<()> {
    if mode >= space.n_modes() {
        return Err(Error::BadMode {
            mode,
            n_modes: space.n_modes(),
        });
    }
    Ok(())
}

/// `a†|n> = sqrt(n+1)|n+1>` (the column at the cutoff is inexact) and
/// `a|n> = sqrt(n)|n-1>`.
pub fn ladder(space: &FockSpace, mode: usize, kind: LadderKind) -> Result<SparseOperator> {
    check_mode(space, mode)?;
    let mut op = SparseOperator::zero(space);
    for c in 0..space.dim() {
        let mut occ = space.state(c);
        let n = occ[mode];
        match kind {
            LadderKind::Raise => {
                if n == space.cutoffs[mode] {
                    op.inexact.insert(c);
                    continue;
                }
                occ[mode] = n + 1;
                let r = space.index(&occ).expect("in box");
                op.cols[c].insert(r, SqrtRational::new(Rational::one(), n as u64 + 1)?);
            }
            LadderKind::Lower => {
                if n == 0 {
                    continue;
                }
                occ[mode] = n - 1;
                let r = space.index(&occ).expect("in box");
                op.cols[c].insert(r, SqrtRational::new(Rational::one(), n as u64)?);
            }
        }
    }
    Ok(op)
}

/// A commuting triple `(X0, X+, X-)` with a scalar label `L` and Casimir.
#[derive(Clone, Debug)]
pub struct TwoModeRealization {
    pub x0: SparseOperator,
    pub raise: SparseOperator,
    pub lower: SparseOperator,
    pub label: SparseOperator,
    /// `J+J- + J0(J0-1)` or `K+K- - K0(K0-1)`
    pub casimir: SparseOperator,
}

fn su2_on(space: &FockSpace) -> Result<TwoModeRealization> {
    let a1d = ladder(space, 0, LadderKind::Raise)?;
    let a1 = ladder(space, 0, LadderKind::Lower)?;
    let a2d = ladder(space, 1, LadderKind::Raise)?;
    let a2 = ladder(space, 1, LadderKind::Lower)?;
    let x0 = SparseOperator::diagonal(space, |s| q(s[0] as i64 - s[1] as i64, 2));
    let label = SparseOperator::diagonal(space, |s| q(s[0] as i64 + s[1] as i64 + 1, 2));
    let raise = a1d.mul(&a2)?;
    let lower = a1.mul(&a2d)?;
    let x0m1 = x0.sub(&SparseOperator::identity(space))?;
    let casimir = raise.mul(&lower)?.add(&x0.mul(&x0m1)?)?;
    Ok(TwoModeRealization {
        x0,
        raise,
        lower,
        label,
        casimir,
    })
}

fn su11_on(space: &FockSpace) -> Result<TwoModeRealization> {
    let a1d = ladder(space, 0, LadderKind::Raise)?;
    let a1 = ladder(space, 0, LadderKind::Lower)?;
    let a2d = ladder(space, 1, LadderKind::Raise)?;
    let a2 = ladder(space, 1, LadderKind::Lower)?;
    let x0 = SparseOperator::diagonal(space, |s| q(s[0] as i64 + s[1] as i64 + 1, 2));
    let label = SparseOperator::diagonal(space, |s| q(s[0] as i64 - s[1] as i64, 2));
    let raise = a1d.mul(&a2d)?;
    let lower = a1.mul(&a2)?;
    let x0m1 = x0.sub(&SparseOperator::identity(space))?;
    let casimir = raise.mul(&lower)?.sub(&x0.mul(&x0m1)?)?;
    Ok(TwoModeRealization {
        x0,
        raise,
        lower,
        label,
        casimir,
    })
}

/// `J0 = (N1-N2)/2`, `J+ = a1†a2`, `J- = a1 a2†`, `L = (N1+N2+1)/2`.
pub fn schwinger_su2(space: &FockSpace) -> Result<TwoModeRealization> {
    space.require_arity(2)?;
    su2_on(space)
}

/// `K0 = (N1+N2+1)/2`, `K+ = a1†a2†`, `K- = a1 a2`, `L = (N1-N2)/2`.
pub fn schwinger_su11(space: &FockSpace) -> Result<TwoModeRealization> {
    space.require_arity(2)?;
    su11_on(space)
}

/// Three-mode realization of one quadratic class.
#[derive(Clone, Debug)]
pub struct Realization {
    pub class: ClassId,
    pub q0: SparseOperator,
    pub qplus: SparseOperator,
    pub qminus: SparseOperator,
    /// ℒ
    pub label: SparseOperator,
    /// 𝒥 (su(2)-based classes) or 𝒦
    pub casimir2: SparseOperator,
}

pub fn realize(class: ClassId, space: &FockSpace) -> Result<Realization> {
    space.require_arity(3)?;
    if !ClassId::QUADRATIC.contains(&class) {
        return Err(Error::InvalidParams(format!(
            "{class} has no three-mode realization; use the two-mode Schwinger forms"
        )));
    }
    let up = |m| ladder(space, m, LadderKind::Raise);
    let down = |m| ladder(space, m, LadderKind::Lower);
    let (a1d, a1, a2d, a2, a3d, a3) = (up(0)?, down(0)?, up(1)?, down(1)?, up(2)?, down(2)?);
    let diag = |c1: i64, c2: i64, c3: i64, c0: i64| {
        SparseOperator::diagonal(space, move |s| {
            q(c1 * s[0] as i64 + c2 * s[1] as i64 + c3 * s[2] as i64 + c0, 4)
        })
    };
    let (q0, label, qplus, qminus) = match class {
        ClassId::QMinus2 => (
            diag(1, -1, -2, 0),
            diag(1, -1, 2, 0),
            SparseOperator::product(&[&a1d, &a2, &a3])?,
            SparseOperator::product(&[&a1, &a2d, &a3d])?,
        ),
        ClassId::QPlus2 => (
            diag(1, -1, 2, 0),
            diag(1, -1, -2, 0),
            SparseOperator::product(&[&a1d, &a2, &a3d])?,
            SparseOperator::product(&[&a1, &a2d, &a3])?,
        ),
        ClassId::QMinus11 => (
            diag(1, 1, -2, 1),
            diag(1, 1, 2, 1),
            SparseOperator::product(&[&a1d, &a2d, &a3])?,
            SparseOperator::product(&[&a1, &a2, &a3d])?,
        ),
        _ => (
            diag(1, 1, 2, 1),
            diag(1, 1, -2, 1),
            SparseOperator::product(&[&a1d, &a2d, &a3d])?,
            SparseOperator::product(&[&a1, &a2, &a3])?,
        ),
    };
    let casimir2 = if class.is_compact() {
        su2_on(space)?.casimir
    } else {
        su11_on(space)?.casimir
    };
    Ok(Realization {
        class,
        q0,
        qplus,
        qminus,
        label,
        casimir2,
    })
}

/// Occupations of the `i`-th invariant basis state, or `None` if negative.
fn block_state(params: &ClassParams, i: usize) -> Option<[i64; 3]> {
    let s2 = (Rational::from(2) * &params.spin).to_i64()?;
    let l4 = (Rational::from(4) * &params.l).to_i64()?;
    let i = i as i64;
    // twice m = 2(i - j) for the compact classes
    let occ = match params.class {
        ClassId::QMinus2 => {
            let m2 = 2 * i - s2;
            [(s2 + m2) / 2, (s2 - m2) / 2, (l4 - m2) / 2]
        }
        ClassId::QPlus2 => {
            let m2 = 2 * i - s2;
            [(s2 + m2) / 2, (s2 - m2) / 2, (m2 - l4) / 2]
        }
        ClassId::QMinus11 => [i + s2 - 1, i, (l4 - s2) / 2 - i],
        ClassId::QPlus11 => [i + s2 - 1, i, i + (s2 - l4) / 2],
        _ => return None,
    };
    occ.iter().all(|&n| n >= 0).then_some(occ)
}

/// Invariant basis of an irrep inside Fock space, in `build_rep` order.
pub fn block_basis(params: &ClassParams, nmax: Option<usize>) -> Result<Vec<[u32; 3]>> {
    let v = params.require(Mode::Extended)?;
    if v.extended {
        return Err(Error::NotFockRealizable(format!(
            "{params}: k outside {{1/2, 1, 3/2, ...}} cannot be presented in terms of three-boson Fock states"
        )));
    }
    let dim = match dimension_of(params)?.finite() {
        Some(d) => d as usize,
        None => nmax.ok_or_else(|| Error::MissingNmax(params.class.to_string()))? + 1,
    };
    (0..dim)
        .map(|i| {
            block_state(params, i)
                .map(|o| o.map(|n| n as u32))
                .ok_or_else(|| Error::InvalidParams(format!("{params} has no Fock basis")))
        })
        .collect()
}

/// Restriction of [`realize`] to the invariant basis of `params`.
pub fn invariant_block(
    params: &ClassParams,
    nmax: Option<usize>,
    space: &FockSpace,
) -> Result<TripleRep> {
    let real = realize(params.class, space)?;
    invariant_block_in(&real, params, nmax)
}

/// As [`invariant_block`], reusing a prebuilt realization.
pub fn invariant_block_in(
    real: &Realization,
    params: &ClassParams,
    nmax: Option<usize>,
) -> Result<TripleRep> {
    if params.class != real.class {
        return Err(Error::InvalidParams(format!(
            "realization is for {}, params are {}",
            real.class, params.class
        )));
    }
    let space = real.q0.space();
    let basis = block_basis(params, nmax)?;
    let mut idx = Vec::with_capacity(basis.len());
    for occ in &basis {
        idx.push(space.index(occ).ok_or_else(|| Error::CutoffTooSmall {
            state: fmt_occ(occ),
            cutoffs: space.to_string(),
        })?);
    }
    let dim = idx.len();
    let truncated = params.class.is_infinite();

    // Q± must map the block into itself (except the cut edge of a truncated block).
    for (i, &c) in idx.iter().enumerate() {
        let up_ok = |r: &usize| i + 1 < dim && *r == idx[i + 1];
        let down_ok = |r: &usize| i > 0 && *r == idx[i - 1];
        let top_cut = truncated && i + 1 == dim;
        if !top_cut && !real.qplus.column(c).keys().all(up_ok) {
            return Err(Error::NotInvariant(format!(
                "Q+ maps {} outside the block",
                fmt_occ(&basis[i])
            )));
        }
        if !real.qminus.column(c).keys().all(down_ok) {
            return Err(Error::NotInvariant(format!(
                "Q- maps {} outside the block",
                fmt_occ(&basis[i])
            )));
        }
        let label = real.label.entry(c, c);
        if label.as_rational() != Some(&params.l) {
            return Err(Error::NotInvariant(format!(
                "L = {label} on {}, expected {}",
                fmt_occ(&basis[i]),
                params.l
            )));
        }
    }

    let q0_diag = idx
        .iter()
        .map(|&c| {
            real.q0
                .entry(c, c)
                .as_rational()
                .cloned()
                .expect("diagonal rational")
        })
        .collect();
    let qplus_sub = (0..dim.saturating_sub(1))
        .map(|i| real.qplus.entry(idx[i + 1], idx[i]))
        .collect();
    let qminus_super = (0..dim.saturating_sub(1))
        .map(|i| real.qminus.entry(idx[i], idx[i + 1]))
        .collect();
    Ok(TripleRep {
        params: params.clone(),
        dim,
        truncated,
        extended: false,
        q0_diag,
        qplus_sub,
        qminus_super,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutatorCheck {
    pub relation: String,
    pub checked_columns: usize,
    pub excluded_columns: usize,
    pub nonzero_entries: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralReport {
    pub class: ClassId,
    pub cutoffs: Vec<u32>,
    pub checks: Vec<CommutatorCheck>,
    pub passed: bool,
}

fn zero_check(name: String, op: &SparseOperator) -> CommutatorCheck {
    let mut checked = 0;
    let mut nonzero = 0;
    for c in 0..op.space().dim() {
        if op.is_exact_column(c) {
            checked += 1;
            nonzero += op.column(c).len();
        }
    }
    CommutatorCheck {
        relation: name,
        checked_columns: checked,
        excluded_columns: op.inexact_columns().len(),
        nonzero_entries: nonzero,
    }
}

/// `[ℒ, Q0,±] = 0` and `[𝒥 or 𝒦, Q0,±] = 0` on every column whose images
/// stay inside the box; the rest are excluded and counted.
pub fn verify_central(class: ClassId, space: &FockSpace) -> Result<CentralReport> {
    let real = realize(class, space)?;
    verify_central_in(&real)
}

pub fn verify_central_in(real: &Realization) -> Result<CentralReport> {
    let cas_name = if real.class.is_compact() { "J" } else { "K" };
    let mut checks = Vec::new();
    for (cname, central) in [("L", &real.label), (cas_name, &real.casimir2)] {
        for (gname, gen) in [("Q0", &real.q0), ("Q+", &real.qplus), ("Q-", &real.qminus)] {
            let comm = central.commutator(gen)?;
            checks.push(zero_check(format!("[{cname},{gname}]"), &comm));
        }
    }
    Ok(CentralReport {
        class: real.class,
        cutoffs: real.q0.space().cutoffs().to_vec(),
        passed: checks.iter().all(|c| c.nonzero_entries == 0),
        checks,
    })
}

/// Lie relations of a two-mode Schwinger realization (`class` is su2 or
/// su11) plus centrality of `L` and the Casimir, on exact columns.
pub fn verify_schwinger(class: ClassId, space: &FockSpace) -> Result<CentralReport> {
    let (real, sign) = match class {
        ClassId::Su2 => (schwinger_su2(space)?, 2),
        ClassId::Su11 => (schwinger_su11(space)?, -2),
        other => {
            return Err(Error::InvalidParams(format!(
                "{other} is not a two-mode Schwinger algebra"
            )))
        }
    };
    let mut checks = vec![
        zero_check(
            "[X0,X+]-X+".into(),
            &real.x0.commutator(&real.raise)?.sub(&real.raise)?,
        ),
        zero_check(
            "[X0,X-]+X-".into(),
            &real.x0.commutator(&real.lower)?.add(&real.lower)?,
        ),
        zero_check(
            format!("[X+,X-]-({sign})X0"),
            &real
                .raise
                .commutator(&real.lower)?
                .sub(&real.x0.scale(&Rational::from(sign)))?,
        ),
    ];
    for (cname, central) in [("L", &real.label), ("C", &real.casimir)] {
        for (gname, gen) in [("X0", &real.x0), ("X+", &real.raise), ("X-", &real.lower)] {
            checks.push(zero_check(format!("[{cname},{gname}]"), &central.commutator(gen)?));
        }
    }
    Ok(CentralReport {
        class,
        cutoffs: space.cutoffs().to_vec(),
        passed: checks.iter().all(|c| c.nonzero_entries == 0),
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenspaceCount {
    pub params: ClassParams,
    /// Fock states in the box with the irrep's ℒ and 𝒥/𝒦 eigenvalues.
    pub eigenspace_dim: usize,
    pub block_dim: usize,
    /// 1, or 2 when the mirrored su(1,1) basis `n1 - n2 = 1 - 2k` is distinct.
    pub blocks: usize,
    pub exhausted: bool,
}

/// Checks that the invariant blocks sharing `(𝒥 or 𝒦, ℒ)` fill the whole
/// eigenspace. Only finite irreps; the box must hold every candidate state.
pub fn eigenspace_count(params: &ClassParams, space: &FockSpace) -> Result<EigenspaceCount> {
    space.require_arity(3)?;
    let block_dim = block_basis(params, None)?.len();
    let real = realize(params.class, space)?;
    let central = params.central_casimir();
    let mut eigenspace_dim = 0;
    for c in 0..space.dim() {
        let s = space.state(c);
        // spin read off the occupations: (n1+n2)/2 or (|n1-n2|+1)/2
        let spin = if params.class.is_compact() {
            q(s[0] as i64 + s[1] as i64, 2)
        } else {
            q((s[0] as i64 - s[1] as i64).abs() + 1, 2)
        };
        let probe = ClassParams::new(params.class, spin, params.l.clone());
        let label = real.label.entry(c, c);
        if probe.central_casimir() == central && label.as_rational() == Some(&params.l) {
            eigenspace_dim += 1;
        }
    }
    let blocks = if !params.class.is_compact() && params.spin != q(1, 2) {
        2
    } else {
        1
    };
    Ok(EigenspaceCount {
        params: params.clone(),
        eigenspace_dim,
        block_dim,
        blocks,
        exhausted: eigenspace_dim == blocks * block_dim,
    })
}
