//! Cyclic Hochschild cohomology and the obstruction theory for lifting a
//! cyclic A∞ structure `h` up the tower `Λ/F_1 ← Λ/F_2 ← ⋯`.
//!
//! On the associated graded of the filtration the differential is `[h, -]`,
//! so every linear problem here is a matrix of `ad h` between slices of one
//! filtration order. Slices are truncated boxes; components leaving the box
//! are dropped, which is consistent because `ad h` never lowers any of the
//! box gradings.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use crate::bialgebra::{bracket, cobracket, CobracketValue};
use crate::ce::{
    bracket_tensors, lambda_bracket, LambdaElement, Tensor, TruncationProfile, Variant,
};
use crate::error::{Error, Result};
use crate::graded::{CyclicWord, Hamiltonian, Parity, SymplecticSpace};
use crate::linalg::{
    homology_dims, matrix_of_operator, solve_and_kernel, tensor_basis, word_basis, BasisSlice,
    SolveOutcome,
};
use crate::mc::{mc_residual, MCCandidate};
use crate::par::{self, Execution};
use crate::rational::{add_map, Q};

fn require_classical(space: &SymplecticSpace, h: &Hamiltonian) -> Result<()> {
    let hh = bracket(space, h, h, 2 * h.max_len());
    if hh.is_zero() {
        Ok(())
    } else {
        Err(Error::Precondition("h does not satisfy {h,h} = 0".into()))
    }
}

/// `ad(h)(f) = {h, f}`, truncated to words of length `<= max_len`.
pub fn hochschild_differential(
    space: &SymplecticSpace,
    h: &Hamiltonian,
    f: &Hamiltonian,
    max_len: usize,
) -> Result<Hamiltonian> {
    require_classical(space, h)?;
    let mut r = bracket(space, h, f, max_len);
    // the scalar part is not in h_{≥1}
    let c = r.scalar().clone();
    r.add_scalar(-c);
    Ok(r)
}

fn word_op<'a>(
    space: &'a SymplecticSpace,
    h: &'a Hamiltonian,
    max_len: usize,
) -> impl Fn(&CyclicWord) -> BTreeMap<CyclicWord, Q> + Sync + Send + 'a {
    move |w: &CyclicWord| {
        bracket(space, h, &Hamiltonian::from_word(w.clone()), max_len)
            .terms()
            .clone()
    }
}

/// Length of `h` when all its words have the same length.
fn homogeneous_len(h: &Hamiltonian) -> Option<usize> {
    let lens: BTreeSet<usize> = h.terms().keys().map(CyclicWord::len).collect();
    (lens.len() == 1).then(|| *lens.iter().next().unwrap())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochschildReport {
    /// Dimension per `(word length, parity)`. Length 0 collects all lengths
    /// when `h` is not homogeneous in length.
    pub dims: BTreeMap<(usize, u8), usize>,
    pub representatives: Vec<Hamiltonian>,
    /// No cohomology in the parity of Maurer-Cartan candidates.
    pub odd_vanishes: bool,
}

impl HochschildReport {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }
}

/// Cohomology of `(h_{≥1}, ad h)` on words of length `<= max_len`.
pub fn hochschild_cohomology(
    space: &SymplecticSpace,
    h: &Hamiltonian,
    max_len: usize,
    exec: Execution,
) -> Result<HochschildReport> {
    require_classical(space, h)?;
    let hp = h.homogeneous_parity(space).unwrap_or(Parity::EVEN);
    let shift = hp + space.bracket_parity();
    let op = word_op(space, h, max_len);
    // pieces: (length key, parity, slice)
    let mut pieces: Vec<(usize, Parity, BasisSlice<CyclicWord>)> = Vec::new();
    // a central h has zero differential, which respects any grading
    let central = !h.is_zero() && homogeneous_len(h).is_none() && is_central(space, h, max_len);
    let by_len = h.is_zero() || central || homogeneous_len(h).is_some();
    for par in [Parity::EVEN, Parity::ODD] {
        if by_len {
            for l in 1..=max_len {
                pieces.push((l, par, word_basis(space, l, l, Some(par))));
            }
        } else {
            pieces.push((0, par, word_basis(space, 1, max_len, Some(par))));
        }
    }
    let m = if central {
        2
    } else {
        homogeneous_len(h).unwrap_or(2)
    };
    let find = |len: usize, par: Parity| -> BasisSlice<CyclicWord> {
        if by_len {
            if len == 0 || len > max_len {
                BasisSlice::new(Vec::new())
            } else {
                word_basis(space, len, len, Some(par))
            }
        } else {
            word_basis(space, 1, max_len, Some(par))
        }
    };
    let results = par::map_collect(
        exec,
        &pieces,
        |(len, par, slice)| -> Result<(usize, u8, Vec<Hamiltonian>)> {
            let out_len = if by_len { len + m - 2 } else { 0 };
            let target = find(out_len, *par + shift);
            let d_out =
                matrix_of_operator(Execution::Sequential, &op, slice, &target, true, |w| {
                    w.render(space)
                })?;
            let src = if by_len {
                (len + 2)
                    .checked_sub(m)
                    .filter(|&l| l >= 1)
                    .map_or_else(|| BasisSlice::new(Vec::new()), |l| find(l, *par + shift))
            } else {
                find(0, *par + shift)
            };
            let d_in = matrix_of_operator(Execution::Sequential, &op, &src, slice, true, |w| {
                w.render(space)
            })?;
            let hom = homology_dims(&d_in, &d_out)?;
            let reps = hom
                .representatives
                .iter()
                .map(|v| {
                    let mut hm = Hamiltonian::zero();
                    for (w, c) in slice.combination(v) {
                        hm.add_word(w, c);
                    }
                    hm
                })
                .collect();
            Ok((*len, par.value(), reps))
        },
    );
    let mut dims = BTreeMap::new();
    let mut representatives = Vec::new();
    for r in results {
        let (len, par, reps) = r?;
        if !reps.is_empty() {
            dims.insert((len, par), reps.len());
        }
        representatives.extend(reps);
    }
    let cand = space.candidate_parity().value();
    let odd_vanishes = dims.iter().all(|(&(_, p), &d)| p != cand || d == 0);
    Ok(HochschildReport {
        dims,
        representatives,
        odd_vanishes,
    })
}

/// A partial solution `x_n = h_0 + ⋯ + h_n` with residual in `F_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCState {
    variant: Variant,
    profile: TruncationProfile,
    base: Hamiltonian,
    components: Vec<LambdaElement>,
}

impl MCState {
    /// The level-0 state `x_0 = h`.
    pub fn new(
        space: &SymplecticSpace,
        h: &Hamiltonian,
        variant: Variant,
        profile: TruncationProfile,
    ) -> Result<Self> {
        if variant == Variant::Hq2 {
            return Err(Error::Usage("the lifting tower lives in lg or lgv".into()));
        }
        require_classical(space, h)?;
        let h0 = LambdaElement::from_hamiltonian(space, variant, h)?;
        MCCandidate::new(space, h0.clone())?;
        if h0.terms().keys().any(|t| !profile.keeps(t)) {
            return Err(Error::Usage(
                "h does not fit in the truncation profile".into(),
            ));
        }
        Ok(MCState {
            variant,
            profile,
            base: h.clone(),
            components: vec![h0],
        })
    }

    /// A state from explicit components; checks the residual condition.
    pub fn from_components(
        space: &SymplecticSpace,
        h: &Hamiltonian,
        variant: Variant,
        profile: TruncationProfile,
        rest: Vec<LambdaElement>,
    ) -> Result<Self> {
        let mut s = Self::new(space, h, variant, profile)?;
        for (i, c) in rest.into_iter().enumerate() {
            if c.terms().keys().any(|t| t.filtration() != i + 1) {
                return Err(Error::Usage(format!(
                    "component {} is not of filtration order {}",
                    i + 1,
                    i + 1
                )));
            }
            s.components.push(c.with_variant(variant));
        }
        let x = MCCandidate::new(space, s.total())?;
        let res = mc_residual(space, &x).filter(|t| s.profile.keeps(t));
        if !res.in_filtration(s.level() + 1) {
            return Err(Error::Usage(
                "residual is not in the next filtration step".into(),
            ));
        }
        Ok(s)
    }

    pub fn level(&self) -> usize {
        self.components.len() - 1
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn profile(&self) -> &TruncationProfile {
        &self.profile
    }

    pub fn base(&self) -> &Hamiltonian {
        &self.base
    }

    pub fn components(&self) -> &[LambdaElement] {
        &self.components
    }

    pub fn total(&self) -> LambdaElement {
        self.components
            .iter()
            .fold(LambdaElement::zero(self.variant), |a, c| a.plus(c))
    }

    /// Residual `dx_n + ½[x_n,x_n]` inside the profile.
    pub fn residual(&self, space: &SymplecticSpace) -> LambdaElement {
        let x = MCCandidate::new(space, self.total()).expect("state components are candidates");
        mc_residual(space, &x).filter(|t| self.profile.keeps(t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `h_{n+1}` with `o_{n+1} + [h_{n+1}, h] = 0`.
    Extension(LambdaElement),
    /// A functional vanishing on every `[t, h]` with `t` in the slice and not on `o_{n+1}`.
    Certificate(BTreeMap<Tensor, Q>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub level: usize,
    pub cocycle: LambdaElement,
    pub is_cocycle: bool,
    pub class_vanishes: bool,
    pub witness: Witness,
}

/// `t ↦ [t, h]`, cut to the profile.
fn ad_h<'a>(
    space: &'a SymplecticSpace,
    variant: Variant,
    h: &'a LambdaElement,
    profile: &'a TruncationProfile,
) -> impl Fn(&Tensor) -> BTreeMap<Tensor, Q> + Sync + Send + 'a {
    move |t: &Tensor| {
        let mut out = BTreeMap::new();
        for (ht, c) in h.terms() {
            add_map(&mut out, &bracket_tensors(space, variant, t, ht), c);
        }
        out.retain(|k, _| profile.keeps(k));
        out
    }
}

/// Slice of tensors of one filtration order and parity inside the box used
/// for the tower. Order-1 terms are excluded since they are not in `Λ`.
fn level_slice(
    space: &SymplecticSpace,
    variant: Variant,
    profile: &TruncationProfile,
    filt: usize,
    parity: Parity,
) -> BasisSlice<Tensor> {
    tensor_basis(space, variant, profile, false, Some(filt), Some(parity))
        .filter(|t| profile.keeps(t))
}

struct Solved {
    outcome: SolveOutcome,
    domain: BasisSlice<Tensor>,
    codomain: BasisSlice<Tensor>,
}

/// Solves `[u, h] = rhs` for `u` in the candidate slice of order `level`.
fn solve_level(
    space: &SymplecticSpace,
    s: &MCState,
    level: usize,
    rhs: &LambdaElement,
    exec: Execution,
) -> Result<Solved> {
    let h0 = &s.components[0];
    let domain = level_slice(
        space,
        s.variant,
        &s.profile,
        level,
        space.candidate_parity(),
    );
    let op = ad_h(space, s.variant, h0, &s.profile);
    let images = par::map_collect(exec, domain.items(), |t| op(t));
    let mut keys: BTreeSet<Tensor> = rhs.terms().keys().cloned().collect();
    for im in &images {
        keys.extend(im.keys().cloned());
    }
    let codomain = BasisSlice::new(keys.into_iter().collect());
    let m = matrix_of_operator(exec, &op, &domain, &codomain, false, |t| t.render(space))?;
    let b = codomain
        .coordinates(rhs.terms())
        .expect("rhs support is in the codomain");
    let rep = solve_and_kernel(&m, Some(&b))?;
    Ok(Solved {
        outcome: rep.outcome.expect("rhs given"),
        domain,
        codomain,
    })
}

/// The obstruction `o_{n+1}` of a state and whether its class vanishes.
pub fn obstruction_class(
    space: &SymplecticSpace,
    s: &MCState,
    exec: Execution,
) -> Result<ObstructionReport> {
    let level = s.level() + 1;
    let o = s.residual(space).filtration_part(level);
    let h0 = &s.components[0];
    let ho = lambda_bracket(space, h0, &o)?.filter(|t| s.profile.keeps(t));
    let is_cocycle = ho.is_zero();
    if !is_cocycle {
        return Err(Error::Integrity(format!(
            "obstruction is not a cocycle: [h, o] = {}",
            ho.render(space)
        )));
    }
    let solved = solve_level(space, s, level, &o.scaled(&-Q::one()), exec)?;
    let (class_vanishes, witness) = match solved.outcome {
        SolveOutcome::Solved(x) => {
            let mut e = LambdaElement::zero(s.variant);
            for (t, c) in solved.domain.combination(&x) {
                e.add_term(t, c);
            }
            (true, Witness::Extension(e))
        }
        SolveOutcome::NoSolution { certificate } => (
            false,
            Witness::Certificate(solved.codomain.combination(&certificate)),
        ),
    };
    Ok(ObstructionReport {
        level,
        cocycle: o,
        is_cocycle,
        class_vanishes,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSpace {
    pub level: usize,
    pub particular: LambdaElement,
    /// Cocycles of order `level` spanning a complement of the coboundaries.
    pub parameter_basis: Vec<LambdaElement>,
}

impl ExtensionSpace {
    /// `particular + Σ α_i basis_i`.
    pub fn point(&self, alpha: &[Q]) -> Result<LambdaElement> {
        self.act(&self.particular, alpha)
    }

    /// Moves an extension by the parameter vector `alpha`.
    pub fn act(&self, ext: &LambdaElement, alpha: &[Q]) -> Result<LambdaElement> {
        if alpha.len() != self.parameter_basis.len() {
            return Err(Error::Usage(format!(
                "expected {} parameters, got {}",
                self.parameter_basis.len(),
                alpha.len()
            )));
        }
        let mut e = ext.clone();
        for (a, b) in alpha.iter().zip(&self.parameter_basis) {
            e = e.plus(&b.scaled(a));
        }
        Ok(e)
    }
}

/// Cohomology of `[-, h]` at the candidate slice of order `level`.
fn level_cohomology(
    space: &SymplecticSpace,
    s: &MCState,
    level: usize,
    exec: Execution,
) -> Result<Vec<LambdaElement>> {
    let h0 = &s.components[0];
    let cand = level_slice(
        space,
        s.variant,
        &s.profile,
        level,
        space.candidate_parity(),
    );
    let gauge = level_slice(space, s.variant, &s.profile, level, space.gauge_parity());
    let op = ad_h(space, s.variant, h0, &s.profile);
    let out_keys: BTreeSet<Tensor> = par::map_collect(exec, cand.items(), |t| op(t))
        .into_iter()
        .flat_map(|m| m.into_keys())
        .collect();
    let target = BasisSlice::new(out_keys.into_iter().collect());
    let d_out = matrix_of_operator(exec, &op, &cand, &target, false, |t| t.render(space))?;
    let d_in = matrix_of_operator(exec, &op, &gauge, &cand, true, |t| t.render(space))?;
    let hom = homology_dims(&d_in, &d_out)?;
    Ok(hom
        .representatives
        .iter()
        .map(|v| {
            let mut e = LambdaElement::zero(s.variant);
            for (t, c) in cand.combination(v) {
                e.add_term(t, c);
            }
            e
        })
        .collect())
}

pub fn extension_space(
    space: &SymplecticSpace,
    s: &MCState,
    exec: Execution,
) -> Result<std::result::Result<ExtensionSpace, ObstructionReport>> {
    let rep = obstruction_class(space, s, exec)?;
    let Witness::Extension(particular) = &rep.witness else {
        return Ok(Err(rep));
    };
    let parameter_basis = level_cohomology(space, s, rep.level, exec)?;
    Ok(Ok(ExtensionSpace {
        level: rep.level,
        particular: particular.clone(),
        parameter_basis,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    Extended(MCState),
    Obstructed(ObstructionReport),
}

/// One step up the tower. `choice` selects a point of the extension space;
/// `None` means the particular solution.
pub fn extend_step(
    space: &SymplecticSpace,
    s: &MCState,
    choice: Option<&[Q]>,
    exec: Execution,
) -> Result<StepOutcome> {
    let ext = match extension_space(space, s, exec)? {
        Err(rep) => return Ok(StepOutcome::Obstructed(rep)),
        Ok(e) => e,
    };
    let h_next = match choice {
        None => ext.particular.clone(),
        Some(a) => ext.point(a)?,
    };
    let mut next = s.clone();
    next.components.push(h_next);
    let res = next.residual(space);
    if !res.in_filtration(next.level() + 1) {
        return Err(Error::Integrity(format!(
            "extension leaves residual {} below order {}",
            res.render(space),
            next.level() + 1
        )));
    }
    Ok(StepOutcome::Extended(next))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftOutcome {
    Lifted(MCState),
    Failed {
        state: MCState,
        report: ObstructionReport,
    },
}

/// Iterates [`extend_step`] with the particular solution up to `target` or
/// the first nonvanishing obstruction.
pub fn lift(
    space: &SymplecticSpace,
    h: &Hamiltonian,
    target: usize,
    variant: Variant,
    profile: TruncationProfile,
    exec: Execution,
) -> Result<LiftOutcome> {
    let mut s = MCState::new(space, h, variant, profile)?;
    while s.level() < target {
        match extend_step(space, &s, None, exec)? {
            StepOutcome::Extended(n) => s = n,
            StepOutcome::Obstructed(report) => return Ok(LiftOutcome::Failed { state: s, report }),
        }
    }
    Ok(LiftOutcome::Lifted(s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintReport {
    pub in_k: bool,
    pub deficit: CobracketValue,
    /// Set when `h` is in `k[V]` and classical: whether its image in `Λ_{γ,ν}` is Maurer-Cartan.
    pub embedded_is_mc: Option<bool>,
}

pub fn quantum_constraint_check(
    space: &SymplecticSpace,
    h: &Hamiltonian,
) -> Result<ConstraintReport> {
    let deficit = cobracket(space, h);
    let in_k = deficit.is_zero();
    let classical = bracket(space, h, h, 2 * h.max_len()).is_zero();
    let embedded_is_mc = if in_k && classical {
        let x = LambdaElement::from_hamiltonian(space, Variant::LambdaGammaNu, h)?;
        Some(mc_residual(space, &MCCandidate::new(space, x)?).is_zero())
    } else {
        None
    };
    Ok(ConstraintReport {
        in_k,
        deficit,
        embedded_is_mc,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KunnethRow {
    pub filtration: usize,
    pub parity: u8,
    pub direct: usize,
    pub predicted: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KunnethReport {
    pub rows: Vec<KunnethRow>,
}

impl KunnethReport {
    pub fn agree(&self) -> bool {
        self.rows.iter().all(|r| r.direct == r.predicted)
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Compares the cohomology of `ad h` on `Ŝ^{≥1}(h_{≥1})[[γ,ν]]` inside the
/// profile with the count predicted from the Hochschild dimensions.
/// Largest box the direct computation will attempt.
pub const KUNNETH_MAX_BOX: usize = 40_000;

pub fn kunneth_check(
    space: &SymplecticSpace,
    h: &Hamiltonian,
    profile: &TruncationProfile,
    exec: Execution,
) -> Result<KunnethReport> {
    require_classical(space, h)?;
    // the box splits along word lengths only when ad h preserves them
    if !(homogeneous_len(h) == Some(2) || is_central(space, h, profile.l)) {
        return Err(Error::Usage(
            "the cross-check needs a quadratic h or h with ad h = 0".into(),
        ));
    }
    let variant = Variant::LambdaGammaNu;
    let mut hl = LambdaElement::zero(variant);
    for (w, c) in h.terms() {
        hl.add_term(Tensor::word(w.clone()), c.clone());
    }
    let shift = h.homogeneous_parity(space).unwrap_or(Parity::EVEN) + space.bracket_parity();
    let full = tensor_basis(space, variant, profile, true, None, None);
    if full.len() > KUNNETH_MAX_BOX {
        return Err(Error::Usage(format!(
            "the truncation box has {} tensors (limit {KUNNETH_MAX_BOX}); use a smaller --trunc",
            full.len()
        )));
    }
    let op = |t: &Tensor| {
        let mut out = BTreeMap::new();
        for (ht, c) in hl.terms() {
            add_map(&mut out, &bracket_tensors(space, variant, ht, t), c);
        }
        out.retain(|k, _| profile.contains(k));
        out
    };
    let mut direct: BTreeMap<(usize, u8), usize> = BTreeMap::new();
    let max_f = full
        .items()
        .iter()
        .map(Tensor::filtration)
        .max()
        .unwrap_or(0);
    for f in 0..=max_f {
        for par in [Parity::EVEN, Parity::ODD] {
            let here = full.filter(|t| t.filtration() == f && t.parity(space) == par);
            if here.is_empty() {
                continue;
            }
            let next = full.filter(|t| t.filtration() == f && t.parity(space) == par + shift);
            let prev = full.filter(|t| t.filtration() == f && t.parity(space) + shift == par);
            let d_out = matrix_of_operator(exec, op, &here, &next, false, |t| t.render(space))?;
            let d_in = matrix_of_operator(exec, op, &prev, &here, false, |t| t.render(space))?;
            let hom = homology_dims(&d_in, &d_out)?;
            direct.insert((f, par.value()), hom.homology_dim);
        }
    }

    // prediction: symmetric powers of HC, times γ^g ν^n
    let hc = hochschild_cohomology(space, h, profile.l, exec)?;
    let classes: Vec<(usize, u8, usize)> = hc.dims.iter().map(|(&(l, p), &d)| (l, p, d)).collect();
    if classes.iter().any(|c| c.0 == 0) {
        return Err(Error::Usage(
            "Hochschild dimensions are not graded by length".into(),
        ));
    }
    // counts[k][parity] of multisets with k factors
    let mut counts: Vec<[usize; 2]> = vec![[0, 0]; profile.k + 1];
    counts[0][0] = 1;
    for &(_, p, d) in &classes {
        let mut next = vec![[0usize, 0usize]; profile.k + 1];
        for k0 in 0..=profile.k {
            for par0 in 0..2 {
                let base = counts[k0][par0];
                if base == 0 {
                    continue;
                }
                for r in 0..=(profile.k - k0) {
                    let ways = if p == 1 {
                        binom(d, r)
                    } else {
                        binom(d + r - 1, r)
                    };
                    if ways == 0 {
                        continue;
                    }
                    let np = (par0 + (p as usize) * r) % 2;
                    next[k0 + r][np] += base * ways;
                }
            }
        }
        counts = next;
    }
    let nu_par = space.nu_parity().value() as usize;
    let max_n = if nu_par == 1 {
        profile.n.min(1)
    } else {
        profile.n
    };
    let mut predicted: BTreeMap<(usize, u8), usize> = BTreeMap::new();
    for (k, row) in counts.iter().enumerate().skip(1) {
        for (par, &cnt) in row.iter().enumerate() {
            if cnt == 0 {
                continue;
            }
            for g in 0..=profile.g {
                for n in 0..=max_n {
                    let f = 2 * g as usize + n as usize + k - 1;
                    if f > profile.p {
                        continue;
                    }
                    let p = (par + nu_par * n as usize) % 2;
                    *predicted.entry((f, p as u8)).or_default() += cnt;
                }
            }
        }
    }
    let keys: BTreeSet<(usize, u8)> = direct.keys().chain(predicted.keys()).copied().collect();
    let rows = keys
        .into_iter()
        .map(|(f, p)| KunnethRow {
            filtration: f,
            parity: p,
            direct: direct.get(&(f, p)).copied().unwrap_or(0),
            predicted: predicted.get(&(f, p)).copied().unwrap_or(0),
        })
        .collect();
    Ok(KunnethReport { rows })
}

/// `ad h` vanishes on every word of length `<= max_len`.
fn is_central(space: &SymplecticSpace, h: &Hamiltonian, max_len: usize) -> bool {
    word_basis(space, 1, max_len, None).items().iter().all(|w| {
        bracket(
            space,
            h,
            &Hamiltonian::from_word(w.clone()),
            h.max_len() + max_len,
        )
        .is_zero()
    })
}
