//! Command-line surface: additive tables, basis listings, products of
//! typed expressions, verification sweeps, and cup-length certificates.

use std::fmt;

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::bockstein::derive_groups;
use crate::intrings::{BIntRing, FIntRing, IntClassB, IntClassF};
use crate::mod2rings::{basis_of_degree, mul_mod2, Mod2Class, RingTag};
use crate::tcs::{cup_length_b2, tcs_gap_table};
use crate::verify::{run_suite, Suite};
use crate::Space;

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

/// A sum of terms; each term is an optional integer coefficient times a
/// product of powered generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expr(pub Vec<Term>);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Option<u64>,
    pub factors: Vec<(String, Option<u32>)>,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<String> = Vec::new();
        if let Some(c) = self.coeff {
            pieces.push(c.to_string());
        }
        for (name, exp) in &self.factors {
            match exp {
                Some(e) => pieces.push(format!("{name}^{e}")),
                None => pieces.push(name.clone()),
            }
        }
        if pieces.is_empty() {
            pieces.push("1".to_string());
        }
        write!(f, "{}", pieces.join("*"))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character '{ch}' at position {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected end of input (expected {expected})")]
    UnexpectedEnd { expected: &'static str },
    #[error("expected {expected} at position {pos}")]
    Expected { expected: &'static str, pos: usize },
    #[error("unknown generator '{name}' at position {pos} (alphabet: {alphabet})")]
    UnknownGenerator {
        name: String,
        pos: usize,
        alphabet: String,
    },
    #[error("number too large at position {pos}")]
    Overflow { pos: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Int(u64),
    Ident(String),
    Plus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let ch = chars[pos];
        if ch.is_whitespace() {
            pos += 1;
        } else if ch == '+' {
            out.push((Token::Plus, pos));
            pos += 1;
        } else if ch == '*' {
            out.push((Token::Star, pos));
            pos += 1;
        } else if ch == '^' {
            out.push((Token::Caret, pos));
            pos += 1;
        } else if ch.is_ascii_digit() {
            let start = pos;
            let mut value: u64 = 0;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(chars[pos] as u64 - '0' as u64))
                    .ok_or(ParseError::Overflow { pos: start })?;
                pos += 1;
            }
            out.push((Token::Int(value), start));
        } else if ch.is_ascii_alphabetic() {
            let start = pos;
            let mut name = String::new();
            // an identifier is letters followed by digits (x1, w2, d4...)
            while pos < chars.len() && chars[pos].is_ascii_alphabetic() {
                name.push(chars[pos]);
                pos += 1;
            }
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                name.push(chars[pos]);
                pos += 1;
            }
            out.push((Token::Ident(name), start));
        } else {
            return Err(ParseError::UnexpectedChar { ch, pos });
        }
    }
    Ok(out)
}

/// Parses `expr := term ('+' term)*; term := [int '*']? factor ('*'
/// factor)*; factor := ident ('^' uint)?` over the given alphabet.
/// A bare integer is also accepted as a term (a constant).
pub fn parse_expr(text: &str, alphabet: &[&str]) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut i = 0;
    let mut terms = Vec::new();
    loop {
        let (term, next) = parse_term(&tokens, i, alphabet)?;
        terms.push(term);
        i = next;
        match tokens.get(i) {
            None => break,
            Some((Token::Plus, _)) => i += 1,
            Some((tok, pos)) => {
                let _ = tok;
                return Err(ParseError::Expected {
                    expected: "'+' between terms",
                    pos: *pos,
                });
            }
        }
    }
    Ok(Expr(terms))
}

fn parse_term(
    tokens: &[(Token, usize)],
    mut i: usize,
    alphabet: &[&str],
) -> Result<(Term, usize), ParseError> {
    let mut coeff = None;
    if let Some((Token::Int(v), _)) = tokens.get(i) {
        coeff = Some(*v);
        i += 1;
        match tokens.get(i) {
            Some((Token::Star, _)) => i += 1,
            // a bare integer constant
            None | Some((Token::Plus, _)) => {
                return Ok((
                    Term {
                        coeff,
                        factors: Vec::new(),
                    },
                    i,
                ));
            }
            Some((_, pos)) => {
                return Err(ParseError::Expected {
                    expected: "'*' after coefficient",
                    pos: *pos,
                });
            }
        }
    }
    let mut factors = Vec::new();
    loop {
        let (factor, next) = parse_factor(tokens, i, alphabet)?;
        factors.push(factor);
        i = next;
        match tokens.get(i) {
            Some((Token::Star, _)) => i += 1,
            _ => break,
        }
    }
    Ok((Term { coeff, factors }, i))
}

fn parse_factor(
    tokens: &[(Token, usize)],
    mut i: usize,
    alphabet: &[&str],
) -> Result<((String, Option<u32>), usize), ParseError> {
    let (name, pos) = match tokens.get(i) {
        Some((Token::Ident(name), pos)) => (name.clone(), *pos),
        Some((_, pos)) => {
            return Err(ParseError::Expected {
                expected: "generator name",
                pos: *pos,
            });
        }
        None => return Err(ParseError::UnexpectedEnd { expected: "generator name" }),
    };
    if !alphabet.contains(&name.as_str()) {
        return Err(ParseError::UnknownGenerator {
            name,
            pos,
            alphabet: alphabet.join(", "),
        });
    }
    i += 1;
    let mut exp = None;
    if let Some((Token::Caret, _)) = tokens.get(i) {
        i += 1;
        match tokens.get(i) {
            Some((Token::Int(v), pos)) => {
                let v = u32::try_from(*v).map_err(|_| ParseError::Overflow { pos: *pos })?;
                exp = Some(v);
                i += 1;
            }
            Some((_, pos)) => {
                return Err(ParseError::Expected {
                    expected: "exponent",
                    pos: *pos,
                });
            }
            None => return Err(ParseError::UnexpectedEnd { expected: "exponent" }),
        }
    }
    Ok(((name, exp), i))
}

// ---------------------------------------------------------------------------
// Evaluation into the four rings
// ---------------------------------------------------------------------------

pub fn mod2_alphabet(space: Space) -> &'static [&'static str] {
    match space {
        Space::F => &["x1", "y1"],
        Space::B => &["u1", "v1", "w2"],
    }
}

pub fn int_alphabet(space: Space) -> &'static [&'static str] {
    match space {
        Space::F => &["x2", "y2", "z3", "w"],
        Space::B => &["a2", "b2", "c3", "d4", "e"],
    }
}

pub fn eval_mod2(expr: &Expr, space: Space, m: u32) -> Mod2Class {
    let tag = match space {
        Space::F => RingTag::F(m),
        Space::B => RingTag::B(m),
    };
    let gen = |name: &str| -> Mod2Class {
        let raw = match name {
            "x1" => return Mod2Class::from_xy(tag, &[crate::mod2rings::MonXY { i: 1, j: 0 }]),
            "y1" => return Mod2Class::from_xy(tag, &[crate::mod2rings::MonXY { i: 0, j: 1 }]),
            "u1" => (1, 0, 0),
            "v1" => (0, 1, 0),
            "w2" => (0, 0, 1),
            _ => unreachable!("alphabet checked at parse time"),
        };
        Mod2Class::from_uvw_raw(tag, &[raw])
    };
    let mut total = Mod2Class::zero(tag);
    for term in &expr.0 {
        if term.coeff.unwrap_or(1) % 2 == 0 {
            continue;
        }
        let mut prod = Mod2Class::one(tag);
        for (name, exp) in &term.factors {
            let g = gen(name);
            for _ in 0..exp.unwrap_or(1) {
                prod = mul_mod2(&prod, &g);
            }
        }
        total = total.add(&prod);
    }
    total
}

pub fn eval_int_f(expr: &Expr, ring: &FIntRing) -> IntClassF {
    let gen = |name: &str| match name {
        "x2" => ring.x2(),
        "y2" => ring.y2(),
        "z3" => ring.z3(),
        "w" => ring.w(),
        _ => unreachable!("alphabet checked at parse time"),
    };
    let mut total = ring.zero();
    for term in &expr.0 {
        let mut prod = ring.one();
        for (name, exp) in &term.factors {
            let g = gen(name);
            for _ in 0..exp.unwrap_or(1) {
                prod = ring.mul(&prod, &g);
            }
        }
        total = total.add(&prod.scale(term.coeff.unwrap_or(1) as i64));
    }
    total
}

pub fn eval_int_b(expr: &Expr, ring: &BIntRing) -> IntClassB {
    let gen = |name: &str| match name {
        "a2" => ring.a2(),
        "b2" => ring.b2(),
        "c3" => ring.c3(),
        "d4" => ring.d4(),
        "e" => ring.e(),
        _ => unreachable!("alphabet checked at parse time"),
    };
    let mut total = ring.zero();
    for term in &expr.0 {
        let mut prod = ring.one();
        for (name, exp) in &term.factors {
            let g = gen(name);
            for _ in 0..exp.unwrap_or(1) {
                prod = ring.mul(&prod, &g);
            }
        }
        total = total.add(&prod.scale(term.coeff.unwrap_or(1) as i64));
    }
    total
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "confcoh",
    version,
    about = "Exact cohomology of two-point configuration spaces of real projective spaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the additive integral cohomology groups per degree
    Groups {
        #[arg(long)]
        space: String,
        #[arg(long)]
        m: u32,
        /// Output format: text, json, or csv
        #[arg(long, default_value = "text")]
        format: String,
        /// Structure constant for m = 5 (0 or 2); shown in JSON output
        #[arg(long, default_value_t = 2)]
        eta_m5: u8,
    },
    /// List the basis of a single degree
    Basis {
        #[arg(long)]
        space: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        degree: u32,
        /// Use the integral ring instead of the mod-2 ring
        #[arg(long)]
        int: bool,
    },
    /// Multiply two expressions and print the normal form
    Multiply {
        #[arg(long)]
        space: String,
        #[arg(long)]
        m: u32,
        /// Use the integral ring instead of the mod-2 ring
        #[arg(long)]
        int: bool,
        /// Structure constant for m = 5 (0 or 2)
        #[arg(long, default_value_t = 2)]
        eta_m5: u8,
        expr_a: String,
        expr_b: String,
    },
    /// Run verification suites over a range of m
    Verify {
        /// Inclusive range, e.g. 1..30
        #[arg(long, default_value = "1..30")]
        m_range: String,
        /// Suite: rings, bss, tcs, strategy, or all
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print the cup-length certificate and lower bound
    Tcs {
        #[arg(long)]
        m: u32,
        /// Output format: text or json
        #[arg(long, default_value = "text")]
        format: String,
        /// Structure constant for m = 5 (0 or 2)
        #[arg(long, default_value_t = 2)]
        eta_m5: u8,
    },
}

fn parse_space(s: &str) -> Result<Space, String> {
    match s {
        "F" | "f" => Ok(Space::F),
        "B" | "b" => Ok(Space::B),
        other => Err(format!("unknown space '{other}' (expected F or B)")),
    }
}

fn parse_m_range(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("bad range '{s}' (expected e.g. 1..30)"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u32 = lo.trim().parse().map_err(|_| format!("bad range '{s}'"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| format!("bad range '{s}'"))?;
    if lo == 0 || hi < lo {
        return Err(format!("bad range '{s}' (need 1 <= lo <= hi)"));
    }
    Ok((lo, hi))
}

fn cmd_groups(space: Space, m: u32, format: &str, eta_m5: u8) -> Result<(), String> {
    let table = derive_groups(space, m);
    let top = 2 * m - 1;
    match format {
        "text" => {
            println!("space {space}, m = {m}");
            println!("{:<5} {:<5} {:<5} {:<5}", "dim", "free", "z2", "z4");
            for d in 0..=top {
                let row = table.row(d);
                println!("{:<5} {:<5} {:<5} {:<5}", d, row.free, row.z2, row.z4);
            }
        }
        "json" => {
            let groups: Vec<serde_json::Value> = (0..=top)
                .map(|d| {
                    let row = table.row(d);
                    serde_json::json!({
                        "dim": d, "free": row.free, "z2": row.z2, "z4": row.z4
                    })
                })
                .collect();
            let mut obj = serde_json::json!({
                "space": space.to_string(),
                "m": m,
                "groups": groups,
            });
            if space == Space::B && m == 5 {
                obj["eta_m5"] = serde_json::json!(eta_m5);
            }
            println!("{obj}");
        }
        "csv" => {
            println!("dim,free,z2,z4");
            for d in 0..=top {
                let row = table.row(d);
                println!("{},{},{},{}", d, row.free, row.z2, row.z4);
            }
        }
        other => return Err(format!("unknown format '{other}'")),
    }
    Ok(())
}

fn cmd_basis(space: Space, m: u32, degree: u32, int: bool) -> Result<(), String> {
    if !int {
        let tag = match space {
            Space::F => RingTag::F(m),
            Space::B => RingTag::B(m),
        };
        let basis = basis_of_degree(tag, degree);
        if basis.is_empty() {
            println!("(none)");
        }
        for b in basis {
            println!("{b}");
        }
        return Ok(());
    }
    let mut lines = Vec::new();
    match space {
        Space::F => {
            let ring = FIntRing::new(m);
            if degree == 0 {
                lines.push("1 (infinite order)".to_string());
            }
            if degree == ring.w_degree() {
                lines.push("w (infinite order)".to_string());
            }
            for mon in ring.torsion_basis(degree) {
                lines.push(ring.monomial(mon.i, mon.j, mon.ez).to_string());
            }
        }
        Space::B => {
            let ring = BIntRing::new(m);
            if degree == 0 {
                lines.push("1 (infinite order)".to_string());
            }
            if degree == ring.e_degree() {
                lines.push("e (infinite order)".to_string());
            }
            for mon in ring.torsion_basis(degree) {
                lines.push(ring.monomial(mon.i, mon.eb, mon.ec, mon.j).to_string());
            }
        }
    }
    if lines.is_empty() {
        println!("(none)");
    }
    for line in lines {
        println!("{line}");
    }
    Ok(())
}

fn cmd_multiply(
    space: Space,
    m: u32,
    int: bool,
    eta_m5: u8,
    expr_a: &str,
    expr_b: &str,
) -> Result<(), String> {
    let alphabet = if int {
        int_alphabet(space)
    } else {
        mod2_alphabet(space)
    };
    let a = parse_expr(expr_a, alphabet).map_err(|e| e.to_string())?;
    let b = parse_expr(expr_b, alphabet).map_err(|e| e.to_string())?;
    if !int {
        let prod = mul_mod2(&eval_mod2(&a, space, m), &eval_mod2(&b, space, m));
        println!("{prod}");
        return Ok(());
    }
    match space {
        Space::F => {
            let ring = FIntRing::new(m);
            let prod = ring.mul(&eval_int_f(&a, &ring), &eval_int_f(&b, &ring));
            println!("{prod}");
        }
        Space::B => {
            let ring = BIntRing::with_eta(m, eta_m5);
            let prod = ring.mul(&eval_int_b(&a, &ring), &eval_int_b(&b, &ring));
            println!("{prod}");
        }
    }
    Ok(())
}

fn cmd_verify(m_range: &str, suite: &str) -> Result<bool, String> {
    let (lo, hi) = parse_m_range(m_range)?;
    let suite: Suite = suite.parse()?;
    let mut all_ok = true;
    for outcome in run_suite(suite, lo, hi) {
        match &outcome.result {
            Ok(()) => println!("ok   {}", outcome.name),
            Err(msg) => {
                println!("FAIL {}: {msg}", outcome.name);
                all_ok = false;
            }
        }
    }
    Ok(all_ok)
}

fn cmd_tcs(m: u32, format: &str, eta_m5: u8) -> Result<(), String> {
    let cert = cup_length_b2(m, eta_m5);
    match format {
        "text" => {
            println!("m = {}", cert.m);
            println!("cup_length = {}", cert.cup_length);
            println!("witness = {}", cert.witness);
            println!("lower_bound = {}", cert.lower_bound);
            println!("eta_dependent = {}", cert.eta_dependent);
            let table = tcs_gap_table(&[m]);
            if let Some(known) = table[0].2 {
                println!("known_value = {known}");
            }
        }
        "json" => {
            let json = serde_json::to_string(&cert).map_err(|e| e.to_string())?;
            println!("{json}");
        }
        other => return Err(format!("unknown format '{other}'")),
    }
    Ok(())
}

/// Entry point for the binary; returns the process exit code
/// (0 success, 1 verification failure, 2 usage error).
pub fn run() -> i32 {
    let cli = Cli::parse();
    let result: Result<bool, String> = match &cli.cmd {
        Cmd::Groups {
            space,
            m,
            format,
            eta_m5,
        } => parse_space(space)
            .and_then(|s| cmd_groups(s, *m, format, *eta_m5))
            .map(|_| true),
        Cmd::Basis {
            space,
            m,
            degree,
            int,
        } => parse_space(space)
            .and_then(|s| cmd_basis(s, *m, *degree, *int))
            .map(|_| true),
        Cmd::Multiply {
            space,
            m,
            int,
            eta_m5,
            expr_a,
            expr_b,
        } => parse_space(space)
            .and_then(|s| cmd_multiply(s, *m, *int, *eta_m5, expr_a, expr_b))
            .map(|_| true),
        Cmd::Verify { m_range, suite } => cmd_verify(m_range, suite),
        Cmd::Tcs { m, format, eta_m5 } => cmd_tcs(*m, format, *eta_m5).map(|_| true),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let expr = parse_expr("b2^2 + 2*d4", int_alphabet(Space::B)).unwrap();
        assert_eq!(expr.0.len(), 2);
        assert_eq!(expr.0[0].factors, vec![("b2".to_string(), Some(2))]);
        assert_eq!(expr.0[1].coeff, Some(2));

        let expr = parse_expr("x1^3*y1", mod2_alphabet(Space::F)).unwrap();
        assert_eq!(expr.0.len(), 1);
        assert_eq!(expr.0[0].factors.len(), 2);

        let err = parse_expr("q7", int_alphabet(Space::B)).unwrap_err();
        assert!(matches!(err, ParseError::UnknownGenerator { pos: 0, .. }));

        let err = parse_expr("b2 ? d4", int_alphabet(Space::B)).unwrap_err();
        assert!(matches!(err, ParseError::UnexpectedChar { ch: '?', pos: 3 }));
    }

    #[test]
    fn eval_examples() {
        // b2 * b2 = 2 d4 at m = 3
        let ring = BIntRing::new(3);
        let a = parse_expr("b2", int_alphabet(Space::B)).unwrap();
        let prod = ring.mul(&eval_int_b(&a, &ring), &eval_int_b(&a, &ring));
        assert_eq!(prod.to_string(), "2*d4 (mod 4)");
        // even coefficients vanish mod 2
        let e = parse_expr("2*x1 + y1", mod2_alphabet(Space::F)).unwrap();
        let c = eval_mod2(&e, Space::F, 3);
        assert_eq!(c.to_string(), "y1");
    }

    #[test]
    fn m_range_parsing() {
        assert_eq!(parse_m_range("1..30").unwrap(), (1, 30));
        assert_eq!(parse_m_range("3..=12").unwrap(), (3, 12));
        assert!(parse_m_range("0..5").is_err());
        assert!(parse_m_range("5").is_err());
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        let factor = (
            prop::sample::select(vec!["a2", "b2", "c3", "d4", "e"]),
            prop::option::of(0u32..6),
        )
            .prop_map(|(name, exp)| (name.to_string(), exp));
        (
            prop::option::of(0u64..100),
            prop::collection::vec(factor, 1..4),
        )
            .prop_map(|(coeff, factors)| Term { coeff, factors })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn parse_print_round_trip(terms in prop::collection::vec(arb_term(), 1..4)) {
            let expr = Expr(terms);
            let printed = expr.to_string();
            let reparsed = parse_expr(&printed, int_alphabet(Space::B)).unwrap();
            prop_assert_eq!(reparsed, expr);
        }
    }
}
