//! Maurer-Cartan residuals, the gauge action and characteristic classes.
//!
//! Candidates have parity `1 + p` and gauge parameters parity `p`, where `p`
//! is the form parity. For odd forms this makes candidates even, for the even
//! one-dimensional form it makes them odd.

use crate::ce::{lambda_bracket, lambda_differential, LambdaElement, TruncationProfile};
use crate::chain::{
    chain_differential, exp_element, exp_operator, gamma_y, s_y, CEChain, ChainBox,
};
use crate::error::{Error, Result};
use crate::graded::SymplecticSpace;
use crate::rational::{factorial, q_frac, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCCandidate {
    value: LambdaElement,
}

impl MCCandidate {
    pub fn new(space: &SymplecticSpace, value: LambdaElement) -> Result<Self> {
        value.validate(space)?;
        match value.homogeneous_parity(space) {
            Some(p) if value.is_zero() || p == space.candidate_parity() => {
                Ok(MCCandidate { value })
            }
            _ => Err(Error::Usage(format!(
                "candidate must be homogeneous of parity {}",
                space.candidate_parity()
            ))),
        }
    }

    pub fn value(&self) -> &LambdaElement {
        &self.value
    }

    pub fn into_value(self) -> LambdaElement {
        self.value
    }
}

/// `dx + ½[x,x]`.
pub fn mc_residual(space: &SymplecticSpace, x: &MCCandidate) -> LambdaElement {
    let v = &x.value;
    let sq = lambda_bracket(space, v, v).expect("same variant");
    lambda_differential(space, v).plus(&sq.scaled(&q_frac(1, 2)))
}

fn check_gauge(space: &SymplecticSpace, y: &LambdaElement, x: &LambdaElement) -> Result<()> {
    if y.variant() != x.variant() {
        return Err(Error::Usage(
            "gauge parameter and candidate live in different variants".into(),
        ));
    }
    match y.homogeneous_parity(space) {
        Some(p) if y.is_zero() || p == space.gauge_parity() => {}
        _ => {
            return Err(Error::Usage(format!(
                "gauge parameter must be homogeneous of parity {}",
                space.gauge_parity()
            )))
        }
    }
    // ad y must raise filtration or weight, otherwise the series need not stop
    if let Some(t) = y
        .terms()
        .keys()
        .find(|t| t.filtration() == 0 && t.weight() <= 0)
    {
        return Err(Error::Precondition(format!(
            "gauge term '{}' has filtration 0 and weight 0",
            t.render(space)
        )));
    }
    Ok(())
}

/// `exp(y)·x = x + Σ_{n≥0} (ad y)^n (dy + [y,x]) / (n+1)!`, truncated to
/// filtration `<= P` and weight `<= max_weight`.
pub fn gauge_act(
    space: &SymplecticSpace,
    y: &LambdaElement,
    x: &MCCandidate,
    profile: &TruncationProfile,
) -> Result<MCCandidate> {
    let xv = &x.value;
    check_gauge(space, y, xv)?;
    let keep = |e: LambdaElement| e.filter(|t| profile.keeps(t));
    let mut term = keep(lambda_differential(space, y).plus(&lambda_bracket(space, y, xv)?));
    let mut total = keep(xv.clone());
    let mut n = 0u32;
    while !term.is_zero() {
        total = total.plus(&term.scaled(&(Q::from_integer(1.into()) / factorial(n + 1))));
        term = keep(lambda_bracket(space, y, &term)?);
        n += 1;
        if n as usize > 4 * (profile.p + profile.max_weight().max(0) as usize) + 8 {
            return Err(Error::Integrity("gauge series did not terminate".into()));
        }
    }
    Ok(MCCandidate { value: total })
}

/// `ch(x) = exp(x)` inside the box; `x` must be Maurer-Cartan within the profile.
pub fn char_class(
    space: &SymplecticSpace,
    x: &MCCandidate,
    profile: &TruncationProfile,
    blocks: usize,
) -> Result<CEChain> {
    let res = mc_residual(space, x).filter(|t| profile.keeps(t));
    if !res.is_zero() {
        return Err(Error::Precondition(format!(
            "not Maurer-Cartan, residual {}",
            res.render(space)
        )));
    }
    Ok(exp_element(
        space,
        &x.value,
        &ChainBox::from_profile(profile, blocks),
    ))
}

/// `ch` without the Maurer-Cartan precondition.
pub fn exp_chain(space: &SymplecticSpace, x: &MCCandidate, bx: &ChainBox) -> CEChain {
    exp_element(space, &x.value, bx)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyReport {
    /// Chains on which `γ_y = δ s_y + s_y δ` was checked.
    pub operator_cases: usize,
    pub operator_witness: Option<String>,
    /// `exp(γ_y) ch(x) = ch(exp(y)·x)` in the box.
    pub exp_witness: Option<String>,
    /// `δ_CE(ch x) = (dx + ½[x,x]) ch x` on chains with fewer blocks than the box.
    pub cycle_witness: Option<String>,
    /// Maurer-Cartan residual of `exp(y)·x` when `x` is Maurer-Cartan.
    pub gauge_invariance_witness: Option<String>,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.operator_witness.is_none()
            && self.exp_witness.is_none()
            && self.cycle_witness.is_none()
            && self.gauge_invariance_witness.is_none()
    }
}

/// Checks the homotopy identities for one pair `(y, x)`.
pub fn homotopy_check(
    space: &SymplecticSpace,
    y: &LambdaElement,
    x: &MCCandidate,
    profile: &TruncationProfile,
    blocks: usize,
) -> Result<HomotopyReport> {
    let xv = &x.value;
    check_gauge(space, y, xv)?;
    let bx = ChainBox::from_profile(profile, blocks);
    let v = xv.variant();

    // (a) on ch(x), on each tensor of x and y, and on their pairwise products
    let mut chains = vec![exp_element(space, xv, &bx), CEChain::one(v)];
    let singles: Vec<CEChain> = xv
        .terms()
        .keys()
        .chain(y.terms().keys())
        .map(|t| CEChain::from_element(&LambdaElement::from_tensor(v, t.clone())))
        .collect();
    for a in &singles {
        for b in &singles {
            chains.push(a.product(space, b));
        }
    }
    chains.extend(singles);
    let mut operator_witness = None;
    for c in &chains {
        let lhs = gamma_y(space, y, c)?;
        let rhs = chain_differential(space, &s_y(space, y, c)?).plus(&s_y(
            space,
            y,
            &chain_differential(space, c),
        )?);
        if lhs != rhs {
            operator_witness = Some(format!(
                "on {}: {} vs {}",
                c.render(space),
                lhs.render(space),
                rhs.render(space)
            ));
            break;
        }
    }

    // (b)
    let lhs = exp_operator(&exp_element(space, xv, &bx), &bx, |c| gamma_y(space, y, c))?;
    let moved = gauge_act(space, y, x, profile)?;
    let rhs = exp_element(space, &moved.value, &bx);
    let exp_witness = (lhs != rhs).then(|| {
        format!("{} vs {}", lhs.render(space), rhs.render(space))
            .chars()
            .take(2000)
            .collect()
    });

    // δ_CE(ch x) = (dx + ½[x,x]) ch x below the top block count
    let chx = exp_element(space, xv, &bx);
    let below = |c: &CEChain| c.filter(|b| b.len() < bx.blocks).truncated(&bx);
    let d_ch = below(&chain_differential(space, &chx));
    let res = mc_residual(space, x);
    let pred = below(&CEChain::from_element(&res).product(space, &chx));
    let cycle_witness = (d_ch != pred).then(|| {
        format!("{} vs {}", d_ch.render(space), pred.render(space))
            .chars()
            .take(2000)
            .collect()
    });

    let res_kept = res.filter(|t| profile.keeps(t));
    let gauge_invariance_witness = if res_kept.is_zero() {
        let r = mc_residual(space, &moved).filter(|t| profile.keeps(t));
        (!r.is_zero()).then(|| r.render(space))
    } else {
        None
    };

    Ok(HomotopyReport {
        operator_cases: chains.len(),
        operator_witness,
        exp_witness,
        cycle_witness,
        gauge_invariance_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ce::{Tensor, Variant};
    use crate::graded::normalize_word;
    use crate::rational::q;

    fn one_d() -> SymplecticSpace {
        SymplecticSpace::one_dim(q(1)).unwrap()
    }

    fn t(s: &SymplecticSpace, n: usize) -> crate::graded::CyclicWord {
        normalize_word(s, &vec![0; n]).unwrap().unwrap().0
    }

    #[test]
    fn residual_examples() {
        let s = one_d();
        let x = LambdaElement::from_tensor(Variant::Hq2, Tensor::word(t(&s, 3)));
        assert!(mc_residual(&s, &MCCandidate::new(&s, x.clone()).unwrap()).is_zero());
        let x = MCCandidate::new(&s, x.with_variant(Variant::LambdaGammaNu)).unwrap();
        let want = LambdaElement::from_tensor(
            Variant::LambdaGammaNu,
            Tensor {
                g: 0,
                n: 1,
                factors: vec![t(&s, 1)],
            },
        )
        .scaled(&q(3));
        assert_eq!(mc_residual(&s, &x), want);
        let z = MCCandidate::new(&s, LambdaElement::zero(Variant::LambdaGamma)).unwrap();
        assert!(mc_residual(&s, &z).is_zero());
    }

    #[test]
    fn wrong_parity_rejected() {
        let s = one_d();
        let (tt, _) = crate::ce::normalize_tensor(&s, 0, 0, &[vec![0], vec![0; 3]])
            .unwrap()
            .unwrap();
        let x = LambdaElement::from_tensor(Variant::LambdaGamma, tt);
        assert!(matches!(MCCandidate::new(&s, x), Err(Error::Usage(_))));
    }

    #[test]
    fn gauge_one_dim_adds_dy() {
        let s = one_d();
        let prof = TruncationProfile::new(9, 3, 2, 1, 6).unwrap();
        let x = MCCandidate::new(
            &s,
            LambdaElement::from_tensor(Variant::LambdaGammaNu, Tensor::word(t(&s, 3))),
        )
        .unwrap();
        let (yt, neg) = crate::ce::normalize_tensor(&s, 0, 0, &[vec![0], vec![0; 5]])
            .unwrap()
            .unwrap();
        assert!(!neg);
        let y = LambdaElement::from_tensor(Variant::LambdaGammaNu, yt);
        let moved = gauge_act(&s, &y, &x, &prof).unwrap();
        let dy = lambda_differential(&s, &y);
        assert!(!dy.is_zero());
        assert_eq!(moved.value(), &x.value().plus(&dy));
        let zero = LambdaElement::zero(Variant::LambdaGammaNu);
        assert_eq!(gauge_act(&s, &zero, &x, &prof).unwrap(), x);
    }

    #[test]
    fn ch_requires_mc() {
        let s = one_d();
        let prof = TruncationProfile::new(9, 3, 2, 1, 6).unwrap();
        let x = MCCandidate::new(
            &s,
            LambdaElement::from_tensor(Variant::LambdaGammaNu, Tensor::word(t(&s, 3))),
        )
        .unwrap();
        assert!(matches!(
            char_class(&s, &x, &prof, 3),
            Err(Error::Precondition(_))
        ));
        let z = MCCandidate::new(&s, LambdaElement::zero(Variant::LambdaGamma)).unwrap();
        assert_eq!(
            char_class(&s, &z, &prof, 3).unwrap(),
            CEChain::one(Variant::LambdaGamma)
        );
    }

    #[test]
    fn homotopy_one_dim() {
        let s = one_d();
        let prof = TruncationProfile::new(9, 3, 2, 1, 4).unwrap();
        let (yt, _) = crate::ce::normalize_tensor(&s, 0, 0, &[vec![0], vec![0; 5]])
            .unwrap()
            .unwrap();
        for v in [Variant::LambdaGamma, Variant::LambdaGammaNu] {
            let x = MCCandidate::new(&s, LambdaElement::from_tensor(v, Tensor::word(t(&s, 3))))
                .unwrap();
            let y = LambdaElement::from_tensor(v, yt.clone());
            let r = homotopy_check(&s, &y, &x, &prof, 3).unwrap();
            assert!(r.passed(), "{v:?} {r:?}");
        }
    }

    #[test]
    fn homotopy_two_dim() {
        let s = SymplecticSpace::standard_2d();
        let prof = TruncationProfile::new(4, 2, 1, 1, 3).unwrap();
        let v = Variant::LambdaGammaNu;
        let w = |l: &[u16]| normalize_word(&s, l).unwrap().unwrap().0;
        let mut xv = LambdaElement::from_tensor(v, Tensor::word(w(&[0, 0])));
        xv.add_term(
            Tensor {
                g: 0,
                n: 0,
                factors: vec![w(&[0]), w(&[0, 0, 0])],
            },
            q(2),
        );
        let x = MCCandidate::new(&s, xv).unwrap();
        assert!(mc_residual(&s, &x).is_zero());
        let mut y = LambdaElement::from_tensor(v, Tensor::word(w(&[0, 0, 1])));
        y.add_term(
            Tensor {
                g: 1,
                n: 0,
                factors: vec![w(&[0, 1])],
            },
            q(-1),
        );
        let r = homotopy_check(&s, &y, &x, &prof, 2).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
