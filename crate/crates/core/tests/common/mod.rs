#![allow(dead_code)]

use std::collections::BTreeMap;

use nchamil::bialgebra::{word_bracket, word_cobracket};
use nchamil::ce::{LambdaElement, Tensor, TruncationProfile, Variant};
use nchamil::graded::normalize_word;
use nchamil::rational::{q, q_frac};
use nchamil::{CyclicWord, SymplecticSpace, Q};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn one_d() -> SymplecticSpace {
    SymplecticSpace::one_dim(q(1)).unwrap()
}

pub fn two_d() -> SymplecticSpace {
    SymplecticSpace::standard_2d()
}

pub fn power(s: &SymplecticSpace, n: usize) -> Option<CyclicWord> {
    normalize_word(s, &vec![0; n]).unwrap().map(|x| x.0)
}

pub fn word(s: &SymplecticSpace, names: &[&str]) -> CyclicWord {
    let letters: Vec<u16> = names.iter().map(|n| s.index_of(n).unwrap()).collect();
    let (w, neg) = normalize_word(s, &letters).unwrap().expect("nonzero word");
    assert!(!neg, "test words must be canonical");
    w
}

pub fn basis(s: &SymplecticSpace, v: Variant, p: &TruncationProfile) -> Vec<LambdaElement> {
    nchamil::ce::enumerate_tensors(s, v, p, false)
        .into_iter()
        .map(|t| LambdaElement::from_tensor(v, t))
        .collect()
}

// ---------------------------------------------------------------- word oracle

/// Koszul sign of reordering `letters` into `letters[perm[0]], letters[perm[1]], …`,
/// counted one transposition of odd letters at a time.
pub fn perm_sign(s: &SymplecticSpace, letters: &[u16], perm: &[usize]) -> bool {
    let mut neg = false;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b]
                && s.parity(letters[perm[a]]).is_odd()
                && s.parity(letters[perm[b]]).is_odd()
            {
                neg = !neg;
            }
        }
    }
    neg
}

/// Independent normal form: `seq = ± min-rotation`, or `None` for zero.
pub fn oracle_normalize(s: &SymplecticSpace, seq: &[u16]) -> Option<(Vec<u16>, bool)> {
    let n = seq.len();
    if n == 0 {
        return Some((vec![], false));
    }
    let mut rots: Vec<(Vec<u16>, bool)> = Vec::new();
    for r in 0..n {
        let perm: Vec<usize> = (r..n).chain(0..r).collect();
        let rot: Vec<u16> = perm.iter().map(|&i| seq[i]).collect();
        rots.push((rot, perm_sign(s, seq, &perm)));
    }
    let min = rots.iter().map(|x| x.0.clone()).min().unwrap();
    let signs: Vec<bool> = rots.iter().filter(|x| x.0 == min).map(|x| x.1).collect();
    if signs.iter().any(|&b| b != signs[0]) {
        return None;
    }
    Some((min, signs[0]))
}

fn signed(c: &Q, neg: bool) -> Q {
    if neg {
        -c.clone()
    } else {
        c.clone()
    }
}

fn add(m: &mut BTreeMap<Vec<u16>, Q>, k: Vec<u16>, v: Q) {
    let e = m.entry(k.clone()).or_insert_with(Q::zero);
    *e += v;
    if e.is_zero() {
        m.remove(&k);
    }
}

/// `{a,b}` by expanding every pair of contracted letters.
pub fn oracle_bracket(s: &SymplecticSpace, a: &[u16], b: &[u16]) -> BTreeMap<Vec<u16>, Q> {
    let (n, m) = (a.len(), b.len());
    let mut out = BTreeMap::new();
    for i in 0..n {
        // a rotated so that a_i is last
        let pa: Vec<usize> = (i + 1..n).chain(0..=i).collect();
        let sa = perm_sign(s, a, &pa);
        let front: Vec<u16> = pa[..n - 1].iter().map(|&k| a[k]).collect();
        let front_odd = front.iter().filter(|&&l| s.parity(l).is_odd()).count() % 2 == 1;
        for j in 0..m {
            let c = s.dual_pairing(a[i], b[j]).clone();
            if c.is_zero() {
                continue;
            }
            let pb: Vec<usize> = (j..m).chain(0..j).collect();
            let sb = perm_sign(s, b, &pb);
            let mut seq = front.clone();
            seq.extend(pb[1..].iter().map(|&k| b[k]));
            let contract = s.form_parity().is_odd() && front_odd;
            if let Some((w, sn)) = oracle_normalize(s, &seq) {
                add(&mut out, w, signed(&c, sa ^ sb ^ contract ^ sn));
            }
        }
    }
    out
}

/// `Δ(w)` by expanding every ordered pair of contracted positions.
pub fn oracle_cobracket(s: &SymplecticSpace, w: &[u16]) -> BTreeMap<(Vec<u16>, Vec<u16>), Q> {
    let n = w.len();
    let mut out: BTreeMap<(Vec<u16>, Vec<u16>), Q> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let c = s.dual_pairing(w[i], w[j]).clone();
            if c.is_zero() {
                continue;
            }
            // arcs strictly between i and j, and between j and i, going forward
            let arc_a: Vec<usize> = (1..n)
                .map(|d| (i + d) % n)
                .take_while(|&k| k != j)
                .collect();
            let arc_b: Vec<usize> = (1..n)
                .map(|d| (j + d) % n)
                .take_while(|&k| k != i)
                .collect();
            // w_i w_j A B as a reordering of w
            let mut perm = vec![i, j];
            perm.extend(&arc_a);
            perm.extend(&arc_b);
            // the cyclic rotation bringing w_i first is a sign on the word itself
            let rot: Vec<usize> = (i..n).chain(0..i).collect();
            let rotated: Vec<u16> = rot.iter().map(|&k| w[k]).collect();
            let srot = perm_sign(s, w, &rot);
            let inner: Vec<usize> = perm.iter().map(|&k| (k + n - i) % n).collect();
            let smove = perm_sign(s, &rotated, &inner);
            let la: Vec<u16> = arc_a.iter().map(|&k| w[k]).collect();
            let lb: Vec<u16> = arc_b.iter().map(|&k| w[k]).collect();
            let (Some((na, sa)), Some((nb, sb))) =
                (oracle_normalize(s, &la), oracle_normalize(s, &lb))
            else {
                continue;
            };
            let v = signed(&(c * q_frac(1, 2)), srot ^ smove ^ sa ^ sb);
            let e = out.entry((na.clone(), nb.clone())).or_insert_with(Q::zero);
            *e += v;
            if e.is_zero() {
                out.remove(&(na, nb));
            }
        }
    }
    out
}

fn slot_letters(x: &Option<CyclicWord>) -> Vec<u16> {
    x.as_ref().map(|w| w.letters().to_vec()).unwrap_or_default()
}

pub fn library_bracket(
    s: &SymplecticSpace,
    a: &CyclicWord,
    b: &CyclicWord,
) -> BTreeMap<Vec<u16>, Q> {
    word_bracket(s, a, b)
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (slot_letters(&k), c))
        .collect()
}

pub fn library_cobracket(s: &SymplecticSpace, w: &CyclicWord) -> BTreeMap<(Vec<u16>, Vec<u16>), Q> {
    word_cobracket(s, w)
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((a, b), c)| ((slot_letters(&a), slot_letters(&b)), c))
        .collect()
}

// --------------------------------------------------------------- dense solver

/// Rank and, when consistent, some solution of `A x = b`, by plain Gaussian
/// elimination on the augmented dense matrix.
pub fn dense_solve(a: &[Vec<Q>], b: &[Q]) -> (usize, bool) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            r.iter()
                .cloned()
                .chain(std::iter::once(bi.clone()))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x /= piv.clone();
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..=cols {
                    let v = &m[rank][k] * &f;
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    let consistent = (rank..rows).all(|r| m[r][cols].is_zero());
    (rank, consistent)
}

/// Random `rows × cols` matrix of rank at most `r` with small entries.
pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, r: usize) -> Vec<Vec<Q>> {
    let small = |rng: &mut ChaCha8Rng| -> Q {
        if rng.gen_bool(0.4) {
            Q::zero()
        } else {
            Q::new(
                rng.gen_range(-4i64..=4).into(),
                rng.gen_range(1i64..=3).into(),
            )
        }
    };
    let left: Vec<Vec<Q>> = (0..rows)
        .map(|_| (0..r).map(|_| small(rng)).collect())
        .collect();
    let right: Vec<Vec<Q>> = (0..r)
        .map(|_| (0..cols).map(|_| small(rng)).collect())
        .collect();
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..r).fold(Q::zero(), |acc, k| acc + &left[i][k] * &right[k][j]))
                .collect()
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ------------------------------------------------------------ random elements

/// Random homogeneous combination of basis tensors of the given parity.
pub fn random_element(
    s: &SymplecticSpace,
    pool: &[Tensor],
    v: Variant,
    parity: nchamil::Parity,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> LambdaElement {
    let candidates: Vec<&Tensor> = pool.iter().filter(|t| t.parity(s) == parity).collect();
    let mut e = LambdaElement::zero(v);
    if candidates.is_empty() {
        return e;
    }
    for _ in 0..terms {
        let t = candidates[rng.gen_range(0..candidates.len())].clone();
        let c = Q::new(
            rng.gen_range(-3i64..=3).into(),
            rng.gen_range(1i64..=2).into(),
        );
        e.add_term(t, c);
    }
    e
}

pub fn one() -> Q {
    Q::one()
}
