//! Command-line front end: the expression grammar, dispatch and reports.
//!
//! Grammar (γ is `g`, ν is `v`):
//!
//! ```text
//! element := term (('+'|'-') term)*
//! term    := ['-'] (rational | factor) ('*' factor | factor)*
//! factor  := 'g^'INT | 'v^'INT | 'w[' NAME (',' NAME)* ']'
//! ```
//!
//! Several words in one term multiply in the symmetric algebra.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bialgebra::{bracket, check_bialgebra_axioms, cobracket};
use crate::ce::{
    extend_cobracket, lambda_bracket, lambda_differential, normalize_tensor, LambdaElement, Tensor,
    TruncationProfile, Variant,
};
use crate::chain::CEChain;
use crate::error::{Error, Result};
use crate::graded::{Hamiltonian, SymplecticSpace};
use crate::kontsevich::verify_kontsevich_suite;
use crate::mc::{char_class, gauge_act, mc_residual, MCCandidate};
use crate::obstruction::{
    extension_space, hochschild_cohomology, kunneth_check, lift, obstruction_class,
    quantum_constraint_check, LiftOutcome, MCState, ObstructionReport, Witness,
};
use crate::par::Execution;
use crate::rational::{render_q, Q};

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += self.peek().unwrap().len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let s = self.take_while(|c| c.is_ascii_digit());
        if s.is_empty() {
            return self.err("expected an integer");
        }
        s.parse().or_else(|_| self.err("integer out of range"))
    }

    fn rational(&mut self) -> Result<Q> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat('-');
        self.skip_ws();
        let num = self.take_while(|c| c.is_ascii_digit());
        if num.is_empty() {
            self.pos = start;
            return self.err("expected a rational coefficient");
        }
        let mut text = num.to_string();
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.take_while(|c| c.is_ascii_digit());
            if den.is_empty() || den.chars().all(|c| c == '0') {
                return self.err("expected a nonzero denominator");
            }
            text = format!("{text}/{den}");
        }
        let q = Q::from_str(&text).or_else(|_| self.err("invalid rational"))?;
        Ok(if neg { -q } else { q })
    }

    fn name(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let s = self.take_while(|c| c.is_alphanumeric() || c == '_');
        if s.is_empty() {
            return self.err("expected a generator name");
        }
        Ok(s)
    }
}

fn at_factor(lx: &mut Lexer) -> bool {
    lx.skip_ws();
    let rest = &lx.src[lx.pos..];
    rest.starts_with("g^") || rest.starts_with("v^") || rest.starts_with("w[")
}

/// Parses an expression into normalized tensors. Tensors without words
/// (bare scalars, `g^i v^j`) are kept so callers can decide what they mean.
pub fn parse_terms(text: &str, space: &SymplecticSpace) -> Result<BTreeMap<Tensor, Q>> {
    let mut lx = Lexer { src: text, pos: 0 };
    let mut out: BTreeMap<Tensor, Q> = BTreeMap::new();
    let mut sign = Q::one();
    loop {
        // a bare factor carries an implicit coefficient of ±1
        let coeff = if at_factor(&mut lx) {
            sign.clone()
        } else if lx.eat('-') {
            if at_factor(&mut lx) {
                -sign.clone()
            } else {
                -lx.rational()? * &sign
            }
        } else {
            lx.rational()? * &sign
        };
        let (mut g, mut n) = (0u32, 0u32);
        let mut words: Vec<Vec<u16>> = Vec::new();
        loop {
            let starred = lx.eat('*');
            if !at_factor(&mut lx) {
                if starred {
                    return lx.err("expected a factor after '*'");
                }
                break;
            }
            let rest = &lx.src[lx.pos..];
            if rest.starts_with("g^") {
                lx.pos += 2;
                g += lx.int()?;
            } else if rest.starts_with("v^") {
                lx.pos += 2;
                n += lx.int()?;
            } else {
                lx.pos += 2;
                let mut letters = Vec::new();
                loop {
                    let start = lx.pos;
                    let nm = lx.name()?;
                    match space.index_of(nm) {
                        Some(i) => letters.push(i),
                        None => {
                            return Err(Error::Config(format!(
                                "unknown generator '{nm}' at {start}"
                            )))
                        }
                    }
                    if !lx.eat(',') {
                        break;
                    }
                }
                lx.expect(']')?;
                words.push(letters);
            }
        }
        if let Some((t, neg)) = normalize_tensor(space, g, n, &words)? {
            let c = if neg { -coeff } else { coeff };
            let e = out.entry(t).or_insert_with(Q::zero);
            *e += c;
        }
        lx.skip_ws();
        if lx.eat('+') {
            sign = Q::one();
        } else if lx.eat('-') {
            sign = -Q::one();
        } else if lx.pos == lx.src.len() {
            break;
        } else {
            return lx.err("expected '+', '-' or end of input");
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Parses an element of the given variant; terms outside it are usage errors.
pub fn parse_expression(
    text: &str,
    space: &SymplecticSpace,
    variant: Variant,
) -> Result<LambdaElement> {
    let terms = parse_terms(text, space)?;
    if let Some(t) = terms.keys().find(|t| t.k() == 0) {
        return Err(Error::Usage(format!(
            "term '{}' has no word factor",
            if t.g + t.n == 0 {
                "scalar".into()
            } else {
                t.render(space)
            }
        )));
    }
    LambdaElement::from_terms(space, variant, terms)
}

/// Parses a Hamiltonian: single words and an optional scalar.
pub fn parse_hamiltonian(text: &str, space: &SymplecticSpace) -> Result<Hamiltonian> {
    let mut h = Hamiltonian::zero();
    for (t, c) in parse_terms(text, space)? {
        if t.g > 0 || t.n > 0 || t.k() > 1 {
            return Err(Error::Usage(format!(
                "'{}' is not a single cyclic word",
                t.render(space)
            )));
        }
        match t.factors.into_iter().next() {
            Some(w) => h.add_word(w, c),
            None => h.add_scalar(c),
        }
    }
    Ok(h)
}

pub fn render_hamiltonian(space: &SymplecticSpace, h: &Hamiltonian) -> String {
    let mut parts: Vec<(bool, String)> = Vec::new();
    if !h.scalar().is_zero() {
        parts.push((h.scalar().is_negative(), render_q(&h.scalar().abs())));
    }
    for (w, c) in h.terms() {
        parts.push((
            c.is_negative(),
            format!("{} * {}", render_q(&c.abs()), w.render(space)),
        ));
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (neg, p)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(&p);
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "nchamil",
    about = "Exact computations with cyclic words, quantum master equations and their obstructions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Space specification (JSON). Defaults to the one-dimensional space.
    #[arg(long, global = true)]
    space: Option<PathBuf>,
    /// Truncation profile L,K,G,N,P.
    #[arg(long, global = true, default_value = "9,3,2,2,7")]
    trunc: String,
    /// lgv, lg or hq2.
    #[arg(long, global = true, default_value = "lgv")]
    variant: String,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Target filtration order for lift, obstruct and extspace.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Number of CE blocks kept by `ch`.
    #[arg(long, global = true, default_value_t = 3)]
    blocks: usize,
    /// Random samples for `axioms`.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// Run without the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Involutive Lie bialgebra axioms on the space.
    Axioms,
    /// Bracket of two elements of the chosen variant.
    Bracket { a: String, b: String },
    /// Cobracket, extended to tensors.
    Cobracket { e: String },
    /// The deformed differential d.
    Diff { e: String },
    /// Maurer-Cartan residual dx + ½[x,x].
    McCheck { x: String },
    /// exp(y)·x.
    Gauge { y: String, x: String },
    /// ch(x) = exp(x) in the CE complex.
    Ch { x: String },
    /// Cohomology of [-, h] on cyclic words up to length L.
    Hochschild { h: String },
    /// Obstruction at level --order (default 1) after lifting with zero choices.
    Obstruct { h: String },
    /// Lift h order by order up to --order (default P-1).
    Lift { h: String },
    /// Extension space at level --order (default 1).
    Extspace { h: String },
    /// Compare the truncated cohomology with symmetric powers of HC.
    Kunneth { h: String },
    /// Δ(h) = 0 and the embedding of classical solutions.
    Constraint { h: String },
    /// The one-dimensional example suite.
    #[command(name = "example-1d")]
    Example1d,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub passed: bool,
    pub witnesses: BTreeMap<String, Value>,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.into(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            passed: true,
            witnesses: BTreeMap::new(),
        }
    }

    fn input(&mut self, k: &str, v: impl Into<Value>) {
        self.inputs.insert(k.into(), v.into());
    }

    fn output(&mut self, k: &str, v: impl Into<Value>) {
        self.outputs.insert(k.into(), v.into());
    }

    fn witness(&mut self, k: &str, v: impl Into<Value>) {
        self.witnesses.insert(k.into(), v.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain values")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{}: {}\n",
            self.command,
            if self.passed { "pass" } else { "FAIL" }
        );
        let mut section = |title: &str, m: &BTreeMap<String, Value>| {
            for (k, v) in m {
                let shown = match v {
                    Value::String(x) => x.clone(),
                    other => other.to_string(),
                };
                s.push_str(&format!("  {title} {k}: {shown}\n"));
            }
        };
        section("in", &self.inputs);
        section("out", &self.outputs);
        section("witness", &self.witnesses);
        s
    }
}

fn q_str(c: &Q) -> Value {
    Value::String(render_q(c))
}

fn obstruction_json(space: &SymplecticSpace, r: &ObstructionReport) -> Value {
    let witness = match &r.witness {
        Witness::Extension(e) => json!({ "extension": e.render(space) }),
        Witness::Certificate(y) => {
            let m: serde_json::Map<String, Value> =
                y.iter().map(|(t, c)| (t.render(space), q_str(c))).collect();
            json!({ "certificate": m })
        }
    };
    json!({
        "level": r.level,
        "cocycle": r.cocycle.render(space),
        "is_cocycle": r.is_cocycle,
        "class_vanishes": r.class_vanishes,
        "witness": witness,
    })
}

fn load_space(path: &Option<PathBuf>) -> Result<SymplecticSpace> {
    match path {
        None => SymplecticSpace::one_dim(Q::one()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Config(format!("cannot read '{}': {e}", p.display())))?;
            SymplecticSpace::from_json(&text)
        }
    }
}

/// Lifts `h` with zero choices to `level` or stops at the first obstruction.
fn state_at(
    space: &SymplecticSpace,
    h: &Hamiltonian,
    level: usize,
    variant: Variant,
    profile: TruncationProfile,
    exec: Execution,
) -> Result<std::result::Result<MCState, ObstructionReport>> {
    Ok(match lift(space, h, level, variant, profile, exec)? {
        LiftOutcome::Lifted(s) => Ok(s),
        LiftOutcome::Failed { report, .. } => Err(report),
    })
}

fn dispatch(cli: &Cli) -> Result<RunReport> {
    let space = load_space(&cli.space)?;
    let sp = &space;
    let profile = TruncationProfile::parse(&cli.trunc)?;
    let variant = Variant::parse(&cli.variant)?;
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let elem = |s: &str| parse_expression(s, sp, variant);
    let ham = |s: &str| parse_hamiltonian(s, sp);

    let mut r;
    match &cli.command {
        Command::Axioms => {
            r = RunReport::new("axioms");
            r.input("max_len", profile.l.min(5));
            r.input("samples", cli.samples);
            r.input("seed", cli.seed);
            let rep = check_bialgebra_axioms(sp, profile.l.min(5), cli.samples, cli.seed, exec);
            for c in &rep.checks {
                r.output(c.name, json!({ "cases": c.cases, "passed": c.passed() }));
                if let Some(w) = &c.witness {
                    r.witness(c.name, w.clone());
                }
            }
            r.passed = rep.passed();
        }
        Command::Bracket { a, b } => {
            r = RunReport::new("bracket");
            r.input("a", a.clone());
            r.input("b", b.clone());
            match (ham(a), ham(b)) {
                (Ok(x), Ok(y)) if x.scalar().is_zero() && y.scalar().is_zero() => {
                    r.output(
                        "result",
                        render_hamiltonian(sp, &bracket(sp, &x, &y, x.max_len() + y.max_len())),
                    );
                }
                _ => r.output(
                    "result",
                    lambda_bracket(sp, &elem(a)?, &elem(b)?)?.render(sp),
                ),
            }
        }
        Command::Cobracket { e } => {
            r = RunReport::new("cobracket");
            r.input("e", e.clone());
            match ham(e) {
                Ok(h) => {
                    let c = cobracket(sp, &h);
                    r.output("pairs", c.render(sp));
                    r.output("result", c.to_lambda(sp).render(sp));
                }
                Err(_) => r.output("result", extend_cobracket(sp, &elem(e)?).render(sp)),
            }
        }
        Command::Diff { e } => {
            r = RunReport::new("diff");
            r.input("e", e.clone());
            r.output("result", lambda_differential(sp, &elem(e)?).render(sp));
        }
        Command::McCheck { x } => {
            r = RunReport::new("mc-check");
            r.input("x", x.clone());
            let res = mc_residual(sp, &MCCandidate::new(sp, elem(x)?)?);
            r.output("residual", res.render(sp));
            r.passed = res.is_zero();
        }
        Command::Gauge { y, x } => {
            r = RunReport::new("gauge");
            r.input("y", y.clone());
            r.input("x", x.clone());
            let xc = MCCandidate::new(sp, elem(x)?)?;
            let out = gauge_act(sp, &elem(y)?, &xc, &profile)?;
            r.output("result", out.value().render(sp));
            let before = mc_residual(sp, &xc).truncated(&profile);
            let after = mc_residual(sp, &out).truncated(&profile);
            r.output("residual_before", before.render(sp));
            r.output("residual_after", after.render(sp));
            r.passed = before.is_zero() == after.is_zero();
        }
        Command::Ch { x } => {
            r = RunReport::new("ch");
            r.input("x", x.clone());
            r.input("blocks", cli.blocks);
            let c: CEChain =
                char_class(sp, &MCCandidate::new(sp, elem(x)?)?, &profile, cli.blocks)?;
            r.output("result", c.render(sp));
            r.output("terms", c.terms().len());
        }
        Command::Hochschild { h } => {
            r = RunReport::new("hochschild");
            r.input("h", h.clone());
            let rep = hochschild_cohomology(sp, &ham(h)?, profile.l, exec)?;
            let dims: serde_json::Map<String, Value> = rep
                .dims
                .iter()
                .map(|((l, p), d)| (format!("len {l} parity {p}"), json!(d)))
                .collect();
            r.output("dims", dims);
            r.output("total", rep.total());
            r.output("odd_vanishes", rep.odd_vanishes);
            r.output(
                "basis",
                rep.representatives
                    .iter()
                    .map(|x| render_hamiltonian(sp, x))
                    .collect::<Vec<_>>(),
            );
        }
        Command::Obstruct { h } => {
            r = RunReport::new("obstruct");
            let level = cli.order.unwrap_or(1).max(1);
            r.input("h", h.clone());
            r.input("order", level);
            match state_at(sp, &ham(h)?, level - 1, variant, profile, exec)? {
                Ok(s) => {
                    let rep = obstruction_class(sp, &s, exec)?;
                    r.output("obstruction", obstruction_json(sp, &rep));
                }
                Err(rep) => {
                    r.output("obstruction", obstruction_json(sp, &rep));
                    r.passed = false;
                }
            }
        }
        Command::Lift { h } => {
            r = RunReport::new("lift");
            let order = cli.order.unwrap_or(profile.p.saturating_sub(1).max(1));
            r.input("h", h.clone());
            r.input("order", order);
            match state_at(sp, &ham(h)?, order, variant, profile, exec)? {
                Ok(s) => {
                    r.output("level", s.level());
                    r.output(
                        "components",
                        s.components()
                            .iter()
                            .map(|c| c.render(sp))
                            .collect::<Vec<_>>(),
                    );
                    let res = s.residual(sp);
                    r.output("residual", res.render(sp));
                    r.output("residual_in_filtration", s.level() + 1);
                    r.passed = res.in_filtration(s.level() + 1);
                }
                Err(rep) => {
                    r.output("failed_at", rep.level);
                    r.witness("obstruction", obstruction_json(sp, &rep));
                    r.passed = false;
                }
            }
        }
        Command::Extspace { h } => {
            r = RunReport::new("extspace");
            let level = cli.order.unwrap_or(1).max(1);
            r.input("h", h.clone());
            r.input("order", level);
            let ext = match state_at(sp, &ham(h)?, level - 1, variant, profile, exec)? {
                Ok(s) => extension_space(sp, &s, exec)?,
                Err(rep) => Err(rep),
            };
            match ext {
                Ok(e) => {
                    r.output("particular", e.particular.render(sp));
                    r.output("dimension", e.parameter_basis.len());
                    r.output(
                        "basis",
                        e.parameter_basis
                            .iter()
                            .map(|b| b.render(sp))
                            .collect::<Vec<_>>(),
                    );
                }
                Err(rep) => {
                    r.witness("obstruction", obstruction_json(sp, &rep));
                    r.passed = false;
                }
            }
        }
        Command::Kunneth { h } => {
            r = RunReport::new("kunneth");
            r.input("h", h.clone());
            let rep = kunneth_check(sp, &ham(h)?, &profile, exec)?;
            let rows: Vec<Value> = rep
                .rows
                .iter()
                .map(|x| json!({ "filtration": x.filtration, "parity": x.parity, "direct": x.direct, "predicted": x.predicted }))
                .collect();
            r.output("rows", rows);
            r.passed = rep.agree();
        }
        Command::Constraint { h } => {
            r = RunReport::new("constraint");
            r.input("h", h.clone());
            let rep = quantum_constraint_check(sp, &ham(h)?)?;
            r.output("in_k", rep.in_k);
            r.output("cobracket", rep.deficit.to_lambda(sp).render(sp));
            if let Some(b) = rep.embedded_is_mc {
                r.output("embedded_is_mc", b);
                r.passed = b;
            }
        }
        Command::Example1d => {
            r = RunReport::new("example-1d");
            let rep = verify_kontsevich_suite(&profile, exec);
            for c in &rep.checks {
                r.output(&c.name, json!({ "passed": c.passed, "detail": c.detail }));
            }
            r.passed = rep.passed();
        }
    }
    r.input("space", sp.to_json());
    r.input("variant", variant.name());
    r.input("trunc", cli.trunc.clone());
    Ok(r)
}

/// Runs one invocation; returns the exit code and the text to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            let text = match cli.format {
                Format::Json => r.to_json(),
                Format::Text => r.to_text(),
            };
            (if r.passed { 0 } else { 1 }, text)
        }
        Err(e) => {
            let code = match e {
                Error::Integrity(_) => 1,
                _ => 2,
            };
            let text = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({ "error": e.to_string(), "exit": code }))
                        .unwrap()
                }
                Format::Text => format!("error: {e}"),
            };
            (code, text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn one_d() -> SymplecticSpace {
        SymplecticSpace::one_dim(q(1)).unwrap()
    }

    #[test]
    fn parse_examples() {
        let s = one_d();
        let t3 = parse_expression("1 * w[t,t,t]", &s, Variant::LambdaGammaNu).unwrap();
        assert_eq!(t3.render(&s), "1 * w[t,t,t]");
        assert!(parse_expression("1 * w[t,t]", &s, Variant::LambdaGammaNu)
            .unwrap()
            .is_zero());
        let o = parse_expression("3/1 * v^1 * w[t]", &s, Variant::LambdaGammaNu).unwrap();
        assert_eq!(o.render(&s), "3 * v^1 * w[t]");
        assert!(parse_expression("0", &s, Variant::LambdaGammaNu)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn parse_errors() {
        let s = one_d();
        assert!(matches!(
            parse_expression("1 * w[t", &s, Variant::LambdaGamma),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_expression("1 * w[u]", &s, Variant::LambdaGamma),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            parse_expression("1 * w[t]", &s, Variant::LambdaGamma),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            parse_expression("1 *", &s, Variant::LambdaGamma),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            parse_expression("1 * w[t,t,t] 2", &s, Variant::LambdaGamma),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn implicit_coefficients() {
        let s = one_d();
        let a = parse_terms("w[t,t,t] - v^1 w[t] + -2 w[t,t,t,t,t]", &s).unwrap();
        let b = parse_terms("1 * w[t,t,t] - 1 * v^1 * w[t] - 2 * w[t,t,t,t,t]", &s).unwrap();
        assert_eq!(a, b);
        assert!(matches!(parse_terms("-", &s), Err(Error::Parse { .. })));
    }

    #[test]
    fn products_and_signs() {
        let s = SymplecticSpace::standard_2d();
        // odd words anticommute
        let a = parse_terms("1 * w[xi] w[x,x,xi]", &s).unwrap();
        let b = parse_terms("-1 * w[x,x,xi] * w[xi]", &s).unwrap();
        assert_eq!(a, b);
        let e = parse_expression(
            "1/2 * g^1 * w[x,xi] - 2 * w[x,x] * w[xi,x,x]",
            &s,
            Variant::LambdaGammaNu,
        )
        .unwrap();
        assert_eq!(
            parse_expression(&e.render(&s), &s, Variant::LambdaGammaNu).unwrap(),
            e
        );
    }

    #[test]
    fn hamiltonian_round_trip() {
        let s = one_d();
        let h = parse_hamiltonian("-2 + 1 * w[t] - 3/4 * w[t,t,t]", &s).unwrap();
        assert_eq!(
            parse_hamiltonian(&render_hamiltonian(&s, &h), &s).unwrap(),
            h
        );
    }

    #[test]
    fn documented_invocations() {
        let (c, out) = run([
            "nchamil",
            "lift",
            "--variant",
            "lg",
            "--order",
            "6",
            "1 * w[t,t,t]",
        ]);
        assert_eq!(c, 0, "{out}");
        let (c, out) = run([
            "nchamil",
            "lift",
            "--variant",
            "lgv",
            "--order",
            "6",
            "--format",
            "json",
            "1 * w[t,t,t]",
        ]);
        assert_eq!(c, 1);
        assert!(out.contains("3 * v^1 * w[t]"), "{out}");
        let (c, _) = run(["nchamil", "mc-check", "0"]);
        assert_eq!(c, 0);
        let (c, _) = run(["nchamil", "mc-check", "1 * w[t"]);
        assert_eq!(c, 2);
        let (c, _) = run(["nchamil", "bogus"]);
        assert_eq!(c, 2);
    }
}
