//! The necklace Lie bracket and cobracket on `h[V]`.
//!
//! Both operations are computed with plain Koszul bookkeeping on letters:
//!
//! * `{a,b}`: for every letter pair `(a_i, b_j)`, rotate `a` so that `a_i` is
//!   last and `b` so that `b_j` is first, contract the two adjacent letters
//!   with the dual pairing (an operator of the form's parity, so it picks up
//!   `(-1)^{p·|A|}` for the letters `A` in front of it) and concatenate.
//! * `Δ(w)`: for every ordered pair `(w_i, w_j)`, rotate `w_i` to the front,
//!   move `w_j` next to it, contract, and split the remaining letters into
//!   the arc between them and the arc after `w_j`. Each unordered pair is
//!   visited in both orientations with weight `1/2`, which realizes the
//!   `[1 + (1 2)]/2` symmetrization.
//!
//! Empty arcs are kept as `None`; the CE layer turns them into `ν`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ce::{self, LambdaElement, Tensor, Variant};
use crate::graded::{
    canonicalize, enumerate_words, rotation_sign, CyclicWord, Hamiltonian, SymplecticSpace,
};
use crate::par::{self, Execution};
use crate::rational::{add_to, q, q_frac, Q};

/// A cyclic word or the empty word.
pub type Slot = Option<CyclicWord>;

fn rotate(letters: &[u16], k: usize) -> Vec<u16> {
    let mut v = letters[k..].to_vec();
    v.extend_from_slice(&letters[..k]);
    v
}

fn slot_of(space: &SymplecticSpace, letters: &[u16]) -> Option<(Slot, bool)> {
    if letters.is_empty() {
        Some((None, false))
    } else {
        canonicalize(space, letters).map(|(w, s)| (Some(w), s))
    }
}

/// `{a,b}` for two canonical words; the empty slot stands for the scalar part.
pub fn word_bracket(space: &SymplecticSpace, a: &CyclicWord, b: &CyclicWord) -> BTreeMap<Slot, Q> {
    let mut out = BTreeMap::new();
    let (al, bl) = (a.letters(), b.letters());
    let p = space.bracket_parity();
    for i in 0..al.len() {
        // a_{i+1} .. a_n a_1 .. a_i
        let ra = rotate(al, i + 1);
        let sa = rotation_sign(space, al, i + 1);
        let (front_a, last) = ra.split_at(ra.len() - 1);
        let pa = space.word_parity(front_a);
        for j in 0..bl.len() {
            let c = space.dual_pairing(last[0], bl[j]);
            if c.is_zero() {
                continue;
            }
            let rb = rotate(bl, j);
            let sb = rotation_sign(space, bl, j);
            let mut joined = front_a.to_vec();
            joined.extend_from_slice(&rb[1..]);
            let Some((slot, s)) = slot_of(space, &joined) else {
                continue;
            };
            let neg = sa ^ sb ^ p.koszul(pa) ^ s;
            add_to(&mut out, slot, if neg { -c.clone() } else { c.clone() });
        }
    }
    out
}

/// `Δ(w)` for a canonical word as a combination of ordered pairs of slots.
pub fn word_cobracket(space: &SymplecticSpace, w: &CyclicWord) -> BTreeMap<(Slot, Slot), Q> {
    let mut out = BTreeMap::new();
    let l = w.letters();
    let n = l.len();
    let half = q_frac(1, 2);
    for i in 0..n {
        let x = rotate(l, i);
        let s0 = rotation_sign(space, l, i);
        for qpos in 1..n {
            let c = space.dual_pairing(x[0], x[qpos]);
            if c.is_zero() {
                continue;
            }
            let arc_a = &x[1..qpos];
            let arc_b = &x[qpos + 1..];
            let move_sign = space.parity(x[qpos]).koszul(space.word_parity(arc_a));
            let Some((sa, na)) = slot_of(space, arc_a) else {
                continue;
            };
            let Some((sb, nb)) = slot_of(space, arc_b) else {
                continue;
            };
            let neg = s0 ^ move_sign ^ na ^ nb;
            let v = c * &half;
            add_to(&mut out, (sa, sb), if neg { -v } else { v });
        }
    }
    out
}

/// Bilinear extension of [`word_bracket`], truncated to words of length `<= max_len`.
pub fn bracket(
    space: &SymplecticSpace,
    a: &Hamiltonian,
    b: &Hamiltonian,
    max_len: usize,
) -> Hamiltonian {
    let mut out = Hamiltonian::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            if wa.len() + wb.len() - 2 > max_len {
                continue;
            }
            let coef = ca * cb;
            for (slot, v) in word_bracket(space, wa, wb) {
                match slot {
                    None => out.add_scalar(v * &coef),
                    Some(w) => out.add_word(w, v * &coef),
                }
            }
        }
    }
    out
}

/// `Δ(a)` with empty components kept explicit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CobracketValue {
    pub pairs: BTreeMap<(Slot, Slot), Q>,
}

impl CobracketValue {
    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Image in the symmetric algebra, empty slots becoming `ν`.
    pub fn to_lambda(&self, space: &SymplecticSpace) -> LambdaElement {
        let mut out = LambdaElement::zero(Variant::LambdaGammaNu);
        for ((a, b), c) in &self.pairs {
            let items = vec![a.clone(), b.clone()];
            if let Some((t, neg)) = ce::assemble(space, 0, items) {
                if !t.factors.is_empty() {
                    out.add_term(t, if neg { -c.clone() } else { c.clone() });
                }
            }
        }
        out
    }

    pub fn render(&self, space: &SymplecticSpace) -> String {
        if self.pairs.is_empty() {
            return "0".into();
        }
        let slot = |s: &Slot| {
            s.as_ref()
                .map(|w| w.render(space))
                .unwrap_or_else(|| "()".into())
        };
        let mut s = String::new();
        for (i, ((a, b), c)) in self.pairs.iter().enumerate() {
            let neg = c.is_negative();
            s.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            s.push_str(&format!(
                "{} * ({} (x) {})",
                crate::rational::render_q(&c.abs()),
                slot(a),
                slot(b)
            ));
        }
        s
    }
}

pub fn cobracket(space: &SymplecticSpace, a: &Hamiltonian) -> CobracketValue {
    let mut out = CobracketValue::default();
    for (w, c) in a.terms() {
        for (k, v) in word_cobracket(space, w) {
            add_to(&mut out.pairs, k, v * c);
        }
    }
    out
}

/// Outcome of one identity in the axiom suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub cases: usize,
    /// Rendered inputs of the first failing case.
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

fn single(space: &SymplecticSpace, w: &CyclicWord) -> LambdaElement {
    let _ = space;
    LambdaElement::from_tensor(
        Variant::LambdaGammaNu,
        Tensor {
            g: 0,
            n: 0,
            factors: vec![w.clone()],
        },
    )
}

/// Shifted parity of a homogeneous element of `h` (the degree in `Πh`).
fn shifted(space: &SymplecticSpace, x: &LambdaElement) -> Option<bool> {
    x.homogeneous_parity(space)
        .map(|p| (p + space.bracket_parity()).is_odd())
}

/// Bracket twisted into an honest graded Lie bracket on `Πh`:
/// `[x,y]' = (-1)^{|x|}{x,y}` when the bracket is odd, `{x,y}` otherwise.
fn shifted_bracket(space: &SymplecticSpace, x: &LambdaElement, y: &LambdaElement) -> LambdaElement {
    let b = ce::lambda_bracket(space, x, y).expect("same variant");
    let twist =
        space.bracket_parity().is_odd() && x.homogeneous_parity(space).is_some_and(|p| p.is_odd());
    if twist {
        b.scaled(&-Q::one())
    } else {
        b
    }
}

/// Homogeneous random combination of words with lengths in `1..=max_len`.
fn random_element(
    space: &SymplecticSpace,
    words: &[CyclicWord],
    rng: &mut ChaCha8Rng,
) -> LambdaElement {
    let parity = crate::graded::Parity::new(rng.gen_range(0..2));
    let pool: Vec<&CyclicWord> = words.iter().filter(|w| w.parity(space) == parity).collect();
    let mut out = LambdaElement::zero(Variant::LambdaGammaNu);
    if pool.is_empty() {
        return out;
    }
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let w = pool[rng.gen_range(0..pool.len())];
        let c = q_frac(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        out.add_term(
            Tensor {
                g: 0,
                n: 0,
                factors: vec![w.clone()],
            },
            c,
        );
    }
    out
}

/// Checks the involutive Lie bialgebra identities on all words of length
/// `<= 3` and on `samples` seeded random homogeneous combinations of words of
/// length `<= max_len`.
///
/// Identities, with `[-,-]'` the bracket on `Πh` and `|·|'` shifted parity:
///
/// * antisymmetry `[x,y]' = -(-1)^{|x|'|y|'}[y,x]'`
/// * Jacobi `[x,[y,z]']' = [[x,y]',z]' + (-1)^{|x|'|y|'}[y,[x,z]']'`
/// * coJacobi: the Leibniz extension of `Δ` squares to zero on words
/// * compatibility: `Δ` is a derivation of the bracket,
///   `Δ{x,y} = (-1)^{p}({Δx,y} + (-1)^{|x|}{x,Δy})` with `p` the bracket parity
/// * involutivity: `δ(Δ(x)) = 0`, i.e. `[-,-]∘Δ = 0`
pub fn check_bialgebra_axioms(
    space: &SymplecticSpace,
    max_len: usize,
    samples: usize,
    seed: u64,
    exec: Execution,
) -> AxiomReport {
    let small: Vec<LambdaElement> = enumerate_words(space, 1, 3)
        .iter()
        .map(|w| single(space, w))
        .collect();
    let pool = enumerate_words(space, 1, max_len);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<LambdaElement> = (0..samples)
        .map(|_| random_element(space, &pool, &mut rng))
        .collect();
    let random_triples: Vec<[LambdaElement; 3]> = random
        .iter()
        .enumerate()
        .map(|(i, x)| {
            [
                x.clone(),
                random[(i + 1) % random.len()].clone(),
                random[(i + 7) % random.len()].clone(),
            ]
        })
        .collect();

    let mut pairs = Vec::new();
    for x in &small {
        for y in &small {
            pairs.push([x.clone(), y.clone()]);
        }
    }
    pairs.extend(random_triples.iter().map(|t| [t[0].clone(), t[1].clone()]));
    let mut triples = Vec::new();
    for x in &small {
        for y in &small {
            for z in &small {
                triples.push([x.clone(), y.clone(), z.clone()]);
            }
        }
    }
    triples.extend(random_triples.iter().cloned());
    let mut singles = small.clone();
    singles.extend(random.iter().cloned());
    // words up to length 4 exhaustively for the unary identities
    singles.extend(
        enumerate_words(space, 4, 4)
            .iter()
            .map(|w| single(space, w)),
    );

    let render2 = |v: &[LambdaElement]| {
        v.iter()
            .map(|e| e.render(space))
            .collect::<Vec<_>>()
            .join(" ; ")
    };

    let antisym = par::find_first(exec, &pairs, |[x, y]| {
        let (sx, sy) = (shifted(space, x)?, shifted(space, y)?);
        let lhs = shifted_bracket(space, x, y);
        let mut rhs = shifted_bracket(space, y, x);
        if !(sx && sy) {
            rhs = rhs.scaled(&-Q::one());
        }
        (lhs != rhs).then(|| render2(&[x.clone(), y.clone()]))
    });

    let jacobi = par::find_first(exec, &triples, |[x, y, z]| {
        let (sx, sy) = (shifted(space, x)?, shifted(space, y)?);
        shifted(space, z)?;
        let lhs = shifted_bracket(space, x, &shifted_bracket(space, y, z));
        let a = shifted_bracket(space, &shifted_bracket(space, x, y), z);
        let mut b = shifted_bracket(space, y, &shifted_bracket(space, x, z));
        if sx && sy {
            b = b.scaled(&-Q::one());
        }
        (lhs != a.plus(&b)).then(|| render2(&[x.clone(), y.clone(), z.clone()]))
    });

    let cojacobi = par::find_first(exec, &singles, |x| {
        let dd = ce::extend_cobracket(space, &ce::extend_cobracket(space, x));
        (!dd.is_zero()).then(|| x.render(space))
    });

    let compat = par::find_first(exec, &pairs, |[x, y]| {
        let px = x.homogeneous_parity(space)?;
        let lhs = ce::extend_cobracket(space, &ce::lambda_bracket(space, x, y).ok()?);
        let a = ce::lambda_bracket(space, &ce::extend_cobracket(space, x), y).ok()?;
        let mut b = ce::lambda_bracket(space, x, &ce::extend_cobracket(space, y)).ok()?;
        if px.is_odd() {
            b = b.scaled(&-Q::one());
        }
        let mut rhs = a.plus(&b);
        if space.bracket_parity().is_odd() {
            rhs = rhs.scaled(&-Q::one());
        }
        (lhs != rhs).then(|| render2(&[x.clone(), y.clone()]))
    });

    let involutive = par::find_first(exec, &singles, |x| {
        let v = ce::ce_delta(space, &ce::extend_cobracket(space, x));
        (!v.is_zero()).then(|| x.render(space))
    });

    AxiomReport {
        checks: vec![
            AxiomCheck {
                name: "graded antisymmetry",
                cases: pairs.len(),
                witness: antisym,
            },
            AxiomCheck {
                name: "graded Jacobi",
                cases: triples.len(),
                witness: jacobi,
            },
            AxiomCheck {
                name: "coJacobi",
                cases: singles.len(),
                witness: cojacobi,
            },
            AxiomCheck {
                name: "compatibility",
                cases: pairs.len(),
                witness: compat,
            },
            AxiomCheck {
                name: "involutivity",
                cases: singles.len(),
                witness: involutive,
            },
        ],
    }
}

#[allow(dead_code)]
fn unit() -> Q {
    Q::one()
}

#[allow(dead_code)]
fn int(n: i64) -> Q {
    q(n)
}
