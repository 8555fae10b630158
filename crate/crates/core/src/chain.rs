//! Chevalley-Eilenberg chains of the DGLAs in [`crate::ce`].
//!
//! A chain is a rational combination of multisets of blocks, each block a
//! normal-form [`Tensor`]. A block is graded by its parity in `Λ` plus the
//! candidate parity, so Maurer-Cartan candidates are even blocks and
//! `exp(x)` does not truncate after the linear term.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed};

use crate::ce::{
    bracket_tensors, differential_tensor, LambdaElement, Tensor, TruncationProfile, Variant,
};
use crate::error::{Error, Result};
use crate::graded::{Parity, SymplecticSpace};
use crate::rational::{add_map, add_to, factorial, render_q, Q};

pub type Blocks = Vec<Tensor>;

/// Bounds on chains: number of blocks, total filtration order, total weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainBox {
    pub blocks: usize,
    pub filtration: usize,
    pub weight: i64,
}

impl ChainBox {
    pub fn from_profile(profile: &TruncationProfile, blocks: usize) -> Self {
        ChainBox {
            blocks,
            filtration: profile.p,
            weight: profile.max_weight(),
        }
    }

    pub fn keeps(&self, b: &[Tensor]) -> bool {
        b.len() <= self.blocks
            && b.iter().map(Tensor::filtration).sum::<usize>() <= self.filtration
            && b.iter().map(Tensor::weight).sum::<i64>() <= self.weight
    }
}

pub fn block_parity(space: &SymplecticSpace, t: &Tensor) -> Parity {
    t.parity(space) + space.candidate_parity()
}

fn blocks_parity(space: &SymplecticSpace, b: &[Tensor]) -> Parity {
    b.iter()
        .fold(Parity::EVEN, |a, t| a + block_parity(space, t))
}

/// Koszul-sorts blocks; `None` when an odd block repeats.
fn sort_blocks(space: &SymplecticSpace, mut b: Blocks) -> Option<(Blocks, bool)> {
    let mut neg = false;
    for i in 1..b.len() {
        let mut j = i;
        while j > 0 && b[j - 1] > b[j] {
            if block_parity(space, &b[j - 1]).is_odd() && block_parity(space, &b[j]).is_odd() {
                neg = !neg;
            }
            b.swap(j - 1, j);
            j -= 1;
        }
    }
    if b.windows(2)
        .any(|w| w[0] == w[1] && block_parity(space, &w[0]).is_odd())
    {
        return None;
    }
    Some((b, neg))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CEChain {
    variant: Variant,
    terms: BTreeMap<Blocks, Q>,
}

impl CEChain {
    pub fn zero(variant: Variant) -> Self {
        CEChain {
            variant,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(variant: Variant) -> Self {
        let mut c = Self::zero(variant);
        c.terms.insert(Vec::new(), Q::one());
        c
    }

    /// One-block chains.
    pub fn from_element(x: &LambdaElement) -> Self {
        let mut c = Self::zero(x.variant());
        for (t, v) in x.terms() {
            c.terms.insert(vec![t.clone()], v.clone());
        }
        c
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn terms(&self) -> &BTreeMap<Blocks, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c` times the product of `blocks` in the given order.
    pub fn add_blocks(&mut self, space: &SymplecticSpace, blocks: Blocks, c: Q) {
        if let Some((b, neg)) = sort_blocks(space, blocks) {
            add_to(&mut self.terms, b, if neg { -c } else { c });
        }
    }

    pub fn scaled(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.variant);
        add_map(&mut out.terms, &self.terms, c);
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        add_map(&mut out.terms, &other.terms, &Q::one());
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        add_map(&mut out.terms, &other.terms, &-Q::one());
        out
    }

    pub fn filter(&self, f: impl Fn(&[Tensor]) -> bool) -> Self {
        CEChain {
            variant: self.variant,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| f(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncated(&self, bx: &ChainBox) -> Self {
        self.filter(|b| bx.keeps(b))
    }

    pub fn product(&self, space: &SymplecticSpace, other: &Self) -> Self {
        let mut out = Self::zero(self.variant);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut blocks = a.clone();
                blocks.extend(b.iter().cloned());
                out.add_blocks(space, blocks, ca * cb);
            }
        }
        out
    }

    /// Blockwise projection to another variant; a term dies when one of its blocks does.
    pub fn project(&self, space: &SymplecticSpace, target: Variant) -> Result<Self> {
        let mut out = Self::zero(target);
        for (b, c) in &self.terms {
            let mut acc = CEChain::one(target).scaled(c);
            for t in b {
                let img = crate::ce::project(
                    &LambdaElement::from_tensor(self.variant, t.clone()),
                    target,
                )?;
                acc = acc.product(space, &CEChain::from_element(&img));
                if acc.is_zero() {
                    break;
                }
            }
            add_map(&mut out.terms, &acc.terms, &Q::one());
        }
        Ok(out)
    }

    pub fn render(&self, space: &SymplecticSpace) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let _ = write!(s, "{}", render_q(&c.abs()));
            for t in b {
                let _ = write!(s, " [{}]", t.render(space));
            }
        }
        s
    }
}

fn block_bracket(
    space: &SymplecticSpace,
    variant: Variant,
    a: &Tensor,
    b: &Tensor,
) -> BTreeMap<Tensor, Q> {
    bracket_tensors(space, variant, a, b)
}

/// The Chevalley-Eilenberg differential `δ_CE`: `d` on each block plus the
/// bracket of every pair of blocks.
pub fn chain_differential(space: &SymplecticSpace, c: &CEChain) -> CEChain {
    let v = c.variant;
    let mut out = CEChain::zero(v);
    for (blocks, coef) in &c.terms {
        let par: Vec<Parity> = blocks.iter().map(|t| block_parity(space, t)).collect();
        let mut before = Parity::EVEN;
        for i in 0..blocks.len() {
            let neg0 = before.is_odd();
            for (r, x) in differential_tensor(space, v, &blocks[i]) {
                let mut nb = blocks.clone();
                nb[i] = r;
                let val = x * coef;
                out.add_blocks(space, nb, if neg0 { -val } else { val });
            }
            before += par[i];
        }
        for i in 0..blocks.len() {
            let before_i = par[..i].iter().fold(Parity::EVEN, |a, &b| a + b);
            for j in i + 1..blocks.len() {
                let between = par[i + 1..j].iter().fold(Parity::EVEN, |a, &b| a + b);
                let neg0 = par[i].koszul(before_i) ^ par[j].koszul(before_i + between);
                let rest: Blocks = blocks
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != i && l != j)
                    .map(|(_, t)| t.clone())
                    .collect();
                for (r, x) in block_bracket(space, v, &blocks[i], &blocks[j]) {
                    let mut nb = vec![r];
                    nb.extend(rest.iter().cloned());
                    let val = x * coef;
                    out.add_blocks(space, nb, if neg0 { -val } else { val });
                }
            }
        }
    }
    out
}

fn check_gauge(space: &SymplecticSpace, y: &LambdaElement) -> Result<()> {
    match y.homogeneous_parity(space) {
        Some(p) if y.is_zero() || p == space.gauge_parity() => Ok(()),
        _ => Err(Error::Usage(format!(
            "gauge parameter must be homogeneous of parity {}",
            space.gauge_parity()
        ))),
    }
}

/// `s_y(G) = y·G`.
pub fn s_y(space: &SymplecticSpace, y: &LambdaElement, c: &CEChain) -> Result<CEChain> {
    check_gauge(space, y)?;
    Ok(CEChain::from_element(&y.with_variant(c.variant)).product(space, c))
}

/// `γ_y(G) = dy·G + Σ_i ± [y, B_i]·(G without B_i)`.
pub fn gamma_y(space: &SymplecticSpace, y: &LambdaElement, c: &CEChain) -> Result<CEChain> {
    check_gauge(space, y)?;
    let v = c.variant;
    let y = y.with_variant(v);
    let dy = crate::ce::lambda_differential(space, &y);
    let mut out = CEChain::from_element(&dy).product(space, c);
    for (blocks, coef) in &c.terms {
        let mut before = Parity::EVEN;
        for i in 0..blocks.len() {
            let bp = block_parity(space, &blocks[i]);
            let rest: Blocks = blocks
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != i)
                .map(|(_, t)| t.clone())
                .collect();
            for (ty, cy) in y.terms() {
                for (r, x) in block_bracket(space, v, ty, &blocks[i]) {
                    let mut nb = vec![r];
                    nb.extend(rest.iter().cloned());
                    let val = x * cy * coef;
                    out.add_blocks(space, nb, if bp.koszul(before) { -val } else { val });
                }
            }
            before += bp;
        }
    }
    Ok(out)
}

/// `Σ_n op^n(c)/n!` within the box; `op` must not decrease the box grading.
pub fn exp_operator(
    c: &CEChain,
    bx: &ChainBox,
    mut op: impl FnMut(&CEChain) -> Result<CEChain>,
) -> Result<CEChain> {
    let mut total = c.truncated(bx);
    let mut term = total.clone();
    let mut n = 1u32;
    while !term.is_zero() {
        let next = op(&term)?.truncated(bx);
        if next == term {
            return Err(Error::Integrity(
                "operator series does not terminate inside the box".into(),
            ));
        }
        term = next.scaled(&(Q::one() / Q::from_integer(n.into())));
        total = total.plus(&term);
        n += 1;
        if n > 10_000 {
            return Err(Error::Integrity(
                "operator series does not terminate inside the box".into(),
            ));
        }
    }
    Ok(total)
}

/// `exp(x) = Σ x^m/m!` truncated to the box.
pub fn exp_element(space: &SymplecticSpace, x: &LambdaElement, bx: &ChainBox) -> CEChain {
    let v = x.variant();
    let xc = CEChain::from_element(x).truncated(bx);
    let mut total = CEChain::one(v);
    let mut power = CEChain::one(v);
    for m in 1..=bx.blocks {
        power = power.product(space, &xc).truncated(bx);
        if power.is_zero() {
            break;
        }
        total = total.plus(&power.scaled(&(Q::one() / factorial(m as u32))));
    }
    total.truncated(bx)
}

/// Chain with at most `blocks` blocks and zero coefficient check helper.
pub fn blocks_at_most(c: &CEChain, blocks: usize) -> CEChain {
    c.filter(|b| b.len() <= blocks)
}

#[allow(dead_code)]
fn parity_of(space: &SymplecticSpace, b: &[Tensor]) -> Parity {
    blocks_parity(space, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ce::enumerate_tensors;
    use crate::rational::q;

    fn basis(space: &SymplecticSpace, variant: Variant) -> Vec<Tensor> {
        let prof = TruncationProfile::new(3, 2, 1, 1, 100).unwrap();
        enumerate_tensors(space, variant, &prof, false)
    }

    #[test]
    fn chain_differential_squares_to_zero_2d() {
        let s = SymplecticSpace::standard_2d();
        let b = basis(&s, Variant::LambdaGammaNu);
        for (i, t1) in b.iter().enumerate() {
            for t2 in b.iter().skip(i) {
                let mut c = CEChain::zero(Variant::LambdaGammaNu);
                c.add_blocks(&s, vec![t1.clone(), t2.clone()], q(1));
                let dd = chain_differential(&s, &chain_differential(&s, &c));
                assert!(dd.is_zero(), "{} -> {}", c.render(&s), dd.render(&s));
            }
        }
    }

    #[test]
    fn ch_zero_is_one() {
        let s = SymplecticSpace::standard_2d();
        let bx = ChainBox {
            blocks: 3,
            filtration: 5,
            weight: 20,
        };
        let c = exp_element(&s, &LambdaElement::zero(Variant::LambdaGamma), &bx);
        assert_eq!(c, CEChain::one(Variant::LambdaGamma));
    }

    #[test]
    fn ch_t_cubed_keeps_squares() {
        let s = SymplecticSpace::one_dim(q(1)).unwrap();
        let t3 = crate::graded::normalize_word(&s, &[0, 0, 0])
            .unwrap()
            .unwrap()
            .0;
        let x = LambdaElement::from_tensor(Variant::LambdaGamma, Tensor::word(t3.clone()));
        let bx = ChainBox {
            blocks: 2,
            filtration: 5,
            weight: 20,
        };
        let c = exp_element(&s, &x, &bx);
        assert_eq!(c.terms().len(), 3);
        assert_eq!(
            c.terms()[&vec![Tensor::word(t3.clone()), Tensor::word(t3)]],
            q(1) / q(2)
        );
    }

    #[test]
    fn homotopy_is_commutator_2d() {
        let s = SymplecticSpace::standard_2d();
        let v = Variant::LambdaGammaNu;
        let b = basis(&s, v);
        let gp = s.gauge_parity();
        let ys: Vec<&Tensor> = b.iter().filter(|t| t.parity(&s) == gp).take(6).collect();
        for y in ys {
            let ye = LambdaElement::from_tensor(v, y.clone());
            for t in b.iter().take(25) {
                let c = CEChain::from_element(&LambdaElement::from_tensor(v, t.clone()));
                let lhs = gamma_y(&s, &ye, &c).unwrap();
                let rhs = chain_differential(&s, &s_y(&s, &ye, &c).unwrap())
                    .plus(&s_y(&s, &ye, &chain_differential(&s, &c)).unwrap());
                assert_eq!(lhs, rhs, "y={} c={}", ye.render(&s), c.render(&s));
            }
        }
    }
}
