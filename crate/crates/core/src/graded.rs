//! Graded vector spaces, cyclic words and Hamiltonians.
//!
//! Letters of a cyclic word are indices of the chosen basis of `V*`; a
//! generator named in a space file stands for its dual letter. A cyclic word
//! is an element of `(V*)^{⊗n}` modulo the Koszul-signed action of `Z/nZ`.
//! Words are stored in their canonical rotation: the lexicographically
//! smallest rotation, ties broken by the earliest offset. Rotating the first
//! `k` letters to the back costs the sign `(-1)^{|front|·|back|}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{add_to, parse_q, render_q, Q};

/// A Z/2 degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Parity(u8);

impl Parity {
    pub const EVEN: Parity = Parity(0);
    pub const ODD: Parity = Parity(1);

    pub fn new(v: u8) -> Parity {
        Parity(v & 1)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 == 1
    }

    pub fn flip(self) -> Parity {
        Parity(self.0 ^ 1)
    }

    /// Whether exchanging two objects of these parities costs a sign.
    pub fn koszul(self, other: Parity) -> bool {
        self.0 & other.0 == 1
    }
}

// parities add in Z/2
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Parity {
    fn add_assign(&mut self, rhs: Parity) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
}

/// How the contraction `⟨-,-⟩^{-1}` on `V*` is derived from the form matrix.
///
/// Only [`DualConvention::TwistedInverse`] makes the bialgebra axioms hold
/// for every valid space; the others exist so that tests can confirm this.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DualConvention {
    /// `c(i,j) = (M^{-1})_{ij} · (-1)^{p·|e_j|}` with `p` the form parity.
    #[default]
    TwistedInverse,
    /// `c(i,j) = (M^{-1})_{ij}`.
    Inverse,
    /// `c(i,j) = (M^{-1})_{ji}`.
    InverseTranspose,
    /// `c(i,j) = (M^{-1})_{ij} · (-1)^{p·|e_i|}`.
    LeftTwistedInverse,
}

impl DualConvention {
    pub const ALL: [DualConvention; 4] = [
        DualConvention::TwistedInverse,
        DualConvention::Inverse,
        DualConvention::InverseTranspose,
        DualConvention::LeftTwistedInverse,
    ];
}

/// A finite Z/2-graded space `V` with a nondegenerate form.
///
/// With an odd form (`form_parity = 1`) the nonzero entries pair letters of
/// opposite parity; with an even form they pair letters of equal parity.
/// In both cases the form is graded skew: `⟨e_j,e_i⟩ = -(-1)^{|e_i||e_j|}⟨e_i,e_j⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticSpace {
    generators: Vec<Generator>,
    form: Vec<Vec<Q>>,
    form_parity: Parity,
    dual: Vec<Vec<Q>>,
    convention: DualConvention,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GeneratorEntry {
    name: String,
    parity: u8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SpaceFile {
    generators: Vec<GeneratorEntry>,
    form: Vec<Vec<String>>,
    form_parity: u8,
}

impl SymplecticSpace {
    pub fn new(generators: Vec<Generator>, form: Vec<Vec<Q>>, form_parity: Parity) -> Result<Self> {
        Self::with_convention(generators, form, form_parity, DualConvention::default())
    }

    pub fn with_convention(
        generators: Vec<Generator>,
        form: Vec<Vec<Q>>,
        form_parity: Parity,
        convention: DualConvention,
    ) -> Result<Self> {
        let d = generators.len();
        if d == 0 {
            return Err(Error::Config("space has no generators".into()));
        }
        if d > u16::MAX as usize {
            return Err(Error::Config("too many generators".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if !is_identifier(&g.name) {
                return Err(Error::Config(format!(
                    "invalid generator name '{}'",
                    g.name
                )));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::Config(format!("duplicate generator '{}'", g.name)));
            }
        }
        if form.len() != d || form.iter().any(|r| r.len() != d) {
            return Err(Error::Config(format!("form must be a {d}x{d} matrix")));
        }
        for i in 0..d {
            for j in 0..d {
                let pi = generators[i].parity;
                let pj = generators[j].parity;
                if !form[i][j].is_zero() && pi + pj != form_parity {
                    return Err(Error::Config(format!(
                        "form entry ({i},{j}) pairs parities {pi} and {pj} but the form parity is {form_parity}"
                    )));
                }
                let mirrored = if pi.koszul(pj) {
                    form[i][j].clone()
                } else {
                    -form[i][j].clone()
                };
                if form[j][i] != mirrored {
                    return Err(Error::Config(format!(
                        "form is not graded skew-symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let inv = invert(&form).ok_or_else(|| Error::Config("form matrix is degenerate".into()))?;
        let mut dual = vec![vec![Q::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let twist = |k: usize| {
                    if form_parity.koszul(generators[k].parity) {
                        -Q::one()
                    } else {
                        Q::one()
                    }
                };
                dual[i][j] = match convention {
                    DualConvention::TwistedInverse => &inv[i][j] * twist(j),
                    DualConvention::Inverse => inv[i][j].clone(),
                    DualConvention::InverseTranspose => inv[j][i].clone(),
                    DualConvention::LeftTwistedInverse => &inv[i][j] * twist(i),
                };
            }
        }
        Ok(SymplecticSpace {
            generators,
            form,
            form_parity,
            dual,
            convention,
        })
    }

    /// The one-dimensional space of the Kontsevich family: one odd letter `t`
    /// with the even form `⟨t,t⟩ = scale`.
    pub fn one_dim(scale: Q) -> Result<Self> {
        Self::new(
            vec![Generator {
                name: "t".into(),
                parity: Parity::ODD,
            }],
            vec![vec![scale]],
            Parity::EVEN,
        )
    }

    /// Even `x`, odd `xi`, odd form with `⟨x,xi⟩ = 1`.
    pub fn standard_2d() -> Self {
        Self::new(
            vec![
                Generator {
                    name: "x".into(),
                    parity: Parity::EVEN,
                },
                Generator {
                    name: "xi".into(),
                    parity: Parity::ODD,
                },
            ],
            vec![vec![Q::zero(), Q::one()], vec![-Q::one(), Q::zero()]],
            Parity::ODD,
        )
        .expect("standard space is valid")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SpaceFile = serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("invalid space file: {e}")))?;
        let generators = file
            .generators
            .into_iter()
            .map(|g| {
                if g.parity > 1 {
                    Err(Error::Config(format!(
                        "parity of '{}' must be 0 or 1",
                        g.name
                    )))
                } else {
                    Ok(Generator {
                        name: g.name,
                        parity: Parity::new(g.parity),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let form = file
            .form
            .iter()
            .map(|row| row.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if file.form_parity > 1 {
            return Err(Error::Config("form_parity must be 0 or 1".into()));
        }
        Self::new(generators, form, Parity::new(file.form_parity))
    }

    pub fn to_json(&self) -> String {
        let file = SpaceFile {
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorEntry {
                    name: g.name.clone(),
                    parity: g.parity.value(),
                })
                .collect(),
            form: self
                .form
                .iter()
                .map(|r| r.iter().map(render_q).collect())
                .collect(),
            form_parity: self.form_parity.value(),
        };
        serde_json::to_string(&file).expect("serializable")
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn parity(&self, i: u16) -> Parity {
        self.generators[i as usize].parity
    }

    pub fn name(&self, i: u16) -> &str {
        &self.generators[i as usize].name
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .map(|i| i as u16)
    }

    pub fn form(&self) -> &[Vec<Q>] {
        &self.form
    }

    pub fn form_parity(&self) -> Parity {
        self.form_parity
    }

    pub fn convention(&self) -> DualConvention {
        self.convention
    }

    /// Entry `(i,j)` of the contraction on `V*`.
    pub fn dual_pairing(&self, i: u16, j: u16) -> &Q {
        &self.dual[i as usize][j as usize]
    }

    /// Parity of the bracket and of the contraction.
    pub fn bracket_parity(&self) -> Parity {
        self.form_parity
    }

    /// Parity of the deformation parameter `ν` (the empty cyclic word).
    ///
    /// Chosen so that the cobracket is an odd operator: `ν` is even for odd
    /// forms and odd for even forms.
    pub fn nu_parity(&self) -> Parity {
        self.form_parity.flip()
    }

    /// Parity of Maurer-Cartan candidates.
    pub fn candidate_parity(&self) -> Parity {
        self.form_parity.flip()
    }

    /// Parity of gauge parameters.
    pub fn gauge_parity(&self) -> Parity {
        self.form_parity
    }

    pub fn word_parity(&self, letters: &[u16]) -> Parity {
        letters
            .iter()
            .fold(Parity::EVEN, |acc, &l| acc + self.parity(l))
    }

    fn check_letters(&self, letters: &[u16]) -> Result<()> {
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= self.dim()) {
            return Err(Error::Config(format!("generator index {bad} out of range")));
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Dense exact inverse by Gauss-Jordan elimination.
pub(crate) fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = Q::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Koszul sign of moving the first `k` letters of `letters` to the back.
pub(crate) fn rotation_sign(space: &SymplecticSpace, letters: &[u16], k: usize) -> bool {
    space
        .word_parity(&letters[..k])
        .koszul(space.word_parity(&letters[k..]))
}

/// A nonzero cyclic word in canonical rotation.
///
/// Words are ordered by length first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicWord(Vec<u16>);

impl Ord for CyclicWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for CyclicWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl CyclicWord {
    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self, space: &SymplecticSpace) -> Parity {
        space.word_parity(&self.0)
    }

    /// Builds the canonical word for `letters`; see [`normalize_word`].
    pub fn new(space: &SymplecticSpace, letters: &[u16]) -> Result<Option<(CyclicWord, bool)>> {
        normalize_word(space, letters)
    }

    pub fn render(&self, space: &SymplecticSpace) -> String {
        let names: Vec<&str> = self.0.iter().map(|&l| space.name(l)).collect();
        format!("w[{}]", names.join(","))
    }
}

/// Canonical rotation of a nonempty letter sequence.
///
/// Returns `None` when some rotation maps the word to minus itself, otherwise
/// the canonical word and whether `letters = -canonical` in the coinvariants.
pub(crate) fn canonicalize(space: &SymplecticSpace, letters: &[u16]) -> Option<(CyclicWord, bool)> {
    let n = letters.len();
    debug_assert!(n > 0);
    let mut best: Option<(Vec<u16>, bool)> = None;
    let mut rotated = Vec::with_capacity(n);
    for k in 0..n {
        rotated.clear();
        rotated.extend_from_slice(&letters[k..]);
        rotated.extend_from_slice(&letters[..k]);
        let sign = rotation_sign(space, letters, k);
        match &best {
            None => best = Some((rotated.clone(), sign)),
            Some((b, s)) => match rotated.as_slice().cmp(b.as_slice()) {
                std::cmp::Ordering::Less => best = Some((rotated.clone(), sign)),
                std::cmp::Ordering::Equal if *s != sign => return None,
                _ => {}
            },
        }
    }
    best.map(|(w, s)| (CyclicWord(w), s))
}

/// Canonical form of a word with its Koszul sign, or `None` for a word that
/// vanishes in the cyclic coinvariants.
pub fn normalize_word(
    space: &SymplecticSpace,
    letters: &[u16],
) -> Result<Option<(CyclicWord, bool)>> {
    if letters.is_empty() {
        return Err(Error::Usage("cannot normalize the empty word".into()));
    }
    space.check_letters(letters)?;
    Ok(canonicalize(space, letters))
}

/// A finite rational combination of cyclic words plus a scalar (length-0) part.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hamiltonian {
    terms: BTreeMap<CyclicWord, Q>,
    scalar: Q,
}

impl Hamiltonian {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(word: CyclicWord) -> Self {
        let mut h = Self::zero();
        h.terms.insert(word, Q::one());
        h
    }

    /// Adds `coeff · letters`, normalizing the word.
    pub fn add_letters(
        &mut self,
        space: &SymplecticSpace,
        letters: &[u16],
        coeff: Q,
    ) -> Result<()> {
        if letters.is_empty() {
            self.scalar += coeff;
            return Ok(());
        }
        if let Some((w, neg)) = normalize_word(space, letters)? {
            add_to(&mut self.terms, w, if neg { -coeff } else { coeff });
        }
        Ok(())
    }

    pub fn add_word(&mut self, word: CyclicWord, coeff: Q) {
        add_to(&mut self.terms, word, coeff);
    }

    pub fn add_scalar(&mut self, coeff: Q) {
        self.scalar += coeff;
    }

    pub fn terms(&self) -> &BTreeMap<CyclicWord, Q> {
        &self.terms
    }

    pub fn scalar(&self) -> &Q {
        &self.scalar
    }

    pub fn coeff(&self, word: &CyclicWord) -> Q {
        self.terms.get(word).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.scalar.is_zero()
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Membership in `h_{≥i}`.
    pub fn in_h_geq(&self, i: usize) -> bool {
        (i == 0 || self.scalar.is_zero()) && self.terms.keys().all(|w| w.len() >= i)
    }

    pub fn truncated(&self, max_len: usize) -> Self {
        Hamiltonian {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= max_len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
            scalar: self.scalar.clone(),
        }
    }

    /// `Some(p)` if every word has parity `p`; `None` for mixed or zero input.
    pub fn homogeneous_parity(&self, space: &SymplecticSpace) -> Option<Parity> {
        let mut it = self.terms.keys().map(|w| w.parity(space));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn scaled(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            add_to(&mut out.terms, w.clone(), v * c);
        }
        out.scalar = &self.scalar * c;
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, v) in &other.terms {
            add_to(&mut out.terms, w.clone(), v.clone());
        }
        out.scalar += &other.scalar;
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(&-Q::one()))
    }
}

/// All nonzero canonical words with lengths in `min_len..=max_len`.
pub fn enumerate_words(space: &SymplecticSpace, min_len: usize, max_len: usize) -> Vec<CyclicWord> {
    let d = space.dim() as u16;
    let mut out = std::collections::BTreeSet::new();
    for len in min_len.max(1)..=max_len {
        let mut seq = vec![0u16; len];
        loop {
            if let Some((w, _)) = canonicalize(space, &seq) {
                out.insert(w);
            }
            // odometer increment
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                seq[pos] += 1;
                if seq[pos] < d {
                    break;
                }
                seq[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
    }
    out.into_iter().collect()
}
