//! The one-dimensional family: one odd generator `t` with `⟨t,t⟩ = 1`.
//! Here every word is an odd power of `t`, the bracket on words vanishes and
//! the cobracket is `Δ(t^{2n+1}) = (2n+1) ν t^{2n-1}`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bialgebra::{bracket, cobracket};
use crate::ce::{normalize_tensor, LambdaElement, Tensor, TruncationProfile, Variant};
use crate::error::{Error, Result};
use crate::graded::{normalize_word, CyclicWord, Hamiltonian, SymplecticSpace};
use crate::mc::{mc_residual, MCCandidate};
use crate::obstruction::{hochschild_cohomology, lift, obstruction_class, LiftOutcome, MCState};
use crate::par::{self, Execution};
use crate::rational::{q, render_q, Q};

fn power(space: &SymplecticSpace, n: usize) -> Option<CyclicWord> {
    normalize_word(space, &vec![0; n])
        .ok()
        .flatten()
        .map(|(w, _)| w)
}

/// `h = Σ c_k t^k` over the given powers `k`, which must be odd.
pub fn make_family(coeffs: &BTreeMap<usize, Q>) -> Result<(SymplecticSpace, Hamiltonian)> {
    make_family_scaled(q(1), coeffs)
}

/// As [`make_family`] with `⟨t,t⟩ = scale`.
pub fn make_family_scaled(
    scale: Q,
    coeffs: &BTreeMap<usize, Q>,
) -> Result<(SymplecticSpace, Hamiltonian)> {
    let space = SymplecticSpace::one_dim(scale)?;
    let mut h = Hamiltonian::zero();
    for (&k, c) in coeffs {
        if k % 2 == 0 {
            return Err(Error::Usage(format!(
                "t^{k} is an even power and vanishes; only odd powers are allowed"
            )));
        }
        if c.is_zero() {
            continue;
        }
        h.add_word(power(&space, k).expect("odd powers survive"), c.clone());
    }
    if !bracket(&space, &h, &h, 2 * h.max_len()).is_zero() {
        return Err(Error::Integrity(
            "{h,h} is nonzero on the one-dimensional space".into(),
        ));
    }
    Ok((space, h))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, passed: bool, detail: String) -> SuiteCheck {
    SuiteCheck {
        name: name.into(),
        passed,
        detail,
    }
}

/// Expected level-1 obstruction of `Σ c_k t^k` in `Λ_{γ,ν}`: `Σ c_k k ν t^{k-2}`.
pub fn expected_first_obstruction(
    space: &SymplecticSpace,
    coeffs: &BTreeMap<usize, Q>,
) -> LambdaElement {
    let mut e = LambdaElement::zero(Variant::LambdaGammaNu);
    for (&k, c) in coeffs {
        if k >= 3 {
            let w = power(space, k - 2).unwrap();
            e.add_term(
                Tensor {
                    g: 0,
                    n: 1,
                    factors: vec![w],
                },
                c * q(k as i64),
            );
        }
    }
    e
}

type Step<'a> = Box<dyn Fn() -> SuiteCheck + Sync + Send + 'a>;

/// The full battery of one-dimensional checks inside `profile`.
pub fn verify_kontsevich_suite(profile: &TruncationProfile, exec: Execution) -> SuiteReport {
    let space = SymplecticSpace::one_dim(q(1)).unwrap();
    let sp = &space;
    let l = profile.l;
    let families: Vec<BTreeMap<usize, Q>> = vec![
        BTreeMap::from([(3, q(1))]),
        BTreeMap::from([(3, q(1)), (5, q(-2))]),
        BTreeMap::from([(5, q(1))]),
    ];
    let fams = &families;
    let steps: Vec<Step> = vec![
        Box::new(move || {
            let bad: Vec<usize> = (1..=l)
                .filter(|&n| power(sp, n).is_some() != (n % 2 == 1))
                .collect();
            check(
                "even powers vanish, odd powers survive",
                bad.is_empty(),
                format!("violations at {bad:?}"),
            )
        }),
        Box::new(move || {
            let ws: Vec<usize> = (1..=l).step_by(2).collect();
            let mut bad = Vec::new();
            let mut scalars = Vec::new();
            for &a in &ws {
                for &b in &ws {
                    let x = Hamiltonian::from_word(power(sp, a).unwrap());
                    let y = Hamiltonian::from_word(power(sp, b).unwrap());
                    let r = bracket(sp, &x, &y, a + b);
                    if !r.terms().is_empty() {
                        bad.push((a, b));
                    }
                    if !r.scalar().is_zero() {
                        scalars.push(format!("{{t^{a},t^{b}}} = {}", render_q(r.scalar())));
                    }
                }
            }
            // only {t,t} = ⟨t,t⟩ reaches the constants, which Λ does not see
            check(
                "bracket vanishes on all word pairs modulo constants",
                bad.is_empty() && scalars.len() <= 1,
                format!(
                    "{} pairs, nonzero at {bad:?}; constants: {}",
                    ws.len() * ws.len(),
                    scalars.join(", ")
                ),
            )
        }),
        Box::new(move || {
            let top = l.max(11);
            let mut bad = Vec::new();
            for k in (3..=top).step_by(2) {
                let got =
                    cobracket(sp, &Hamiltonian::from_word(power(sp, k).unwrap())).to_lambda(sp);
                let want = expected_first_obstruction(sp, &BTreeMap::from([(k, q(1))]));
                if got != want {
                    bad.push(k);
                }
            }
            check(
                "cobracket of t^(2n+1) is (2n+1) v t^(2n-1)",
                bad.is_empty(),
                format!("up to t^{top}, mismatches at {bad:?}"),
            )
        }),
        Box::new(move || {
            let mut ok = true;
            let mut detail = String::new();
            for h in [
                Hamiltonian::zero(),
                Hamiltonian::from_word(power(sp, 3).unwrap()),
            ] {
                match hochschild_cohomology(sp, &h, l, Execution::Sequential) {
                    Ok(r) => {
                        let want: BTreeMap<(usize, u8), usize> =
                            (1..=l).step_by(2).map(|k| ((k, 1), 1)).collect();
                        ok &= r.dims == want && !r.odd_vanishes;
                        detail = format!("dims {:?}", r.dims);
                    }
                    Err(e) => {
                        ok = false;
                        detail = e.to_string();
                    }
                }
            }
            check("Hochschild cohomology is all odd functions", ok, detail)
        }),
        Box::new(move || {
            let mut ok = true;
            let mut detail = Vec::new();
            for c in fams {
                let (s1, h) = make_family(c).unwrap();
                let lifted = MCState::new(&s1, &h, Variant::LambdaGammaNu, *profile)
                    .and_then(|st| obstruction_class(&s1, &st, Execution::Sequential));
                match lifted {
                    Ok(rep) => {
                        let good = !rep.class_vanishes
                            && rep.cocycle == expected_first_obstruction(&s1, c);
                        ok &= good;
                        detail.push(format!(
                            "{}: {}",
                            h_render(&s1, &h),
                            rep.cocycle.render(&s1)
                        ));
                    }
                    Err(e) => {
                        ok = false;
                        detail.push(e.to_string());
                    }
                }
            }
            check("nonzero h cannot be lifted in lgv", ok, detail.join("; "))
        }),
        Box::new(move || {
            let mut ok = true;
            let mut detail = Vec::new();
            for c in fams {
                let (s1, h) = make_family(c).unwrap();
                match lift(
                    &s1,
                    &h,
                    profile.p,
                    Variant::LambdaGamma,
                    *profile,
                    Execution::Sequential,
                ) {
                    Ok(LiftOutcome::Lifted(st)) => {
                        detail.push(format!("lifted to order {}", st.level()))
                    }
                    Ok(LiftOutcome::Failed { report, .. }) => {
                        ok = false;
                        detail.push(format!("obstructed at {}", report.level));
                    }
                    Err(e) => {
                        ok = false;
                        detail.push(e.to_string());
                    }
                }
            }
            check("every h lifts in lg", ok, detail.join("; "))
        }),
        Box::new(move || {
            let h = Hamiltonian::zero();
            let r = MCState::new(sp, &h, Variant::LambdaGammaNu, *profile).and_then(|st| {
                let o = obstruction_class(sp, &st, Execution::Sequential)?;
                let l = lift(
                    sp,
                    &h,
                    profile.p,
                    Variant::LambdaGammaNu,
                    *profile,
                    Execution::Sequential,
                )?;
                Ok(o.cocycle.is_zero() && matches!(l, LiftOutcome::Lifted(_)))
            });
            let detail = match &r {
                Ok(true) => "obstruction 0, lifted".to_string(),
                Ok(false) => "obstructed".to_string(),
                Err(e) => e.to_string(),
            };
            check(
                "h = 0 lifts in lgv with zero obstruction",
                matches!(r, Ok(true)),
                detail,
            )
        }),
        Box::new(move || {
            let mut bad = 0;
            for seed in 0..8u64 {
                let a = random_assignment(seed, profile);
                if general_solution_sample(&a, profile).is_err() {
                    bad += 1;
                }
            }
            check(
                "sampled general solutions are Maurer-Cartan in lg",
                bad == 0,
                format!("{bad} of 8 failed"),
            )
        }),
    ];
    let checks = par::map_collect(exec, &steps, |f| f());
    SuiteReport { checks }
}

fn h_render(space: &SymplecticSpace, h: &Hamiltonian) -> String {
    crate::cli::render_hamiltonian(space, h)
}

/// Keys are `(i, [r_1, …, r_k])` for `γ^i t^{2r_1+1} ⋯ t^{2r_k+1}`.
pub type Assignment = BTreeMap<(u32, Vec<usize>), Q>;

/// `Σ a^i_{r_1…r_k} γ^i t^{2r_1+1} ⋯ t^{2r_k+1}` in `Λ_γ`, certified Maurer-Cartan.
pub fn general_solution_sample(
    a: &Assignment,
    profile: &TruncationProfile,
) -> Result<LambdaElement> {
    let space = SymplecticSpace::one_dim(q(1))?;
    let mut e = LambdaElement::zero(Variant::LambdaGamma);
    for ((g, rs), c) in a {
        if c.is_zero() {
            continue;
        }
        if rs.is_empty() || rs.len() % 2 == 0 {
            return Err(Error::Usage(format!(
                "term γ^{g} {rs:?} has an even number of odd factors"
            )));
        }
        let words: Vec<Vec<u16>> = rs.iter().map(|r| vec![0u16; 2 * r + 1]).collect();
        let Some((t, neg)) = normalize_tensor(&space, *g, 0, &words)? else {
            continue;
        };
        if !profile.contains(&t) {
            return Err(Error::Usage(format!(
                "term {} is outside the truncation",
                t.render(&space)
            )));
        }
        e.add_term(t, if neg { -c.clone() } else { c.clone() });
    }
    e.validate(&space)
        .map_err(|err| Error::Usage(err.to_string()))?;
    let x = MCCandidate::new(&space, e.clone())?;
    let r = mc_residual(&space, &x);
    if !r.is_zero() {
        return Err(Error::Integrity(format!(
            "residual {} is nonzero",
            r.render(&space)
        )));
    }
    Ok(e)
}

/// A random assignment with distinct exponents inside `profile`.
pub fn random_assignment(seed: u64, profile: &TruncationProfile) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_r = (profile.l - 1) / 2;
    let mut a = Assignment::new();
    for _ in 0..6 {
        let g = rng.gen_range(0..=profile.g);
        let mut k = 2 * rng.gen_range(0..=(profile.k - 1) / 2) + 1;
        k = k.min(max_r);
        if k == 0 {
            continue;
        }
        let mut rs: Vec<usize> = Vec::new();
        while rs.len() < k {
            let r = rng.gen_range(1..=max_r);
            if !rs.contains(&r) {
                rs.push(r);
            }
        }
        rs.sort();
        if 2 * g as usize + k - 1 > profile.p {
            continue;
        }
        let c = Q::new(
            rng.gen_range(-5i64..=5).into(),
            rng.gen_range(1i64..=4).into(),
        );
        a.insert((g, rs), c);
    }
    a
}
