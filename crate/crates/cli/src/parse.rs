//! Expression grammar for wreath elements and Heisenberg words.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := scalar | 's'INT | 'c'INT | 'p['INT','INT']' | 'q['INT','INT']'
//!         | '[' bentry (',' bentry)* ']' | '(' expr ')'
//! bentry := ('1'|'v1'|'v2'|'w') ('*g^'INT)?
//! scalar := INT ('/' INT)? | 'q' ('^' '-'? INT)? | 'z' ('^' '-'? INT)?
//! ```
//!
//! `q` without brackets is the Laurent variable, `z` is the primitive root of unity of order l.

use std::fmt;

use heiscat::heisenberg::{normal_form, HeisenGen, HeisenNF};
use heiscat::wreath::{BGammaBasisElem, CliffordMono, Ext, Permutation, WreathBasisWord};
use heiscat::{CartanData, CycloScalar, LaurentPoly, WreathElem};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Word(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Word(w) => write!(f, "'{w}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Word(chars[start..i].iter().collect())));
        } else if "+-*/^()[],".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(CliError::Parse { pos: i, expected: "an expression".into(), found: format!("'{c}'") });
        }
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

/// A scalar monomial r q^a z^b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff {
    pub rational: BigRational,
    pub q: i64,
    pub z: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    S(usize),
    C(usize),
    P(usize, u32),
    Q(usize, u32),
    Tensor(Vec<BGammaBasisElem>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Scalar(Coeff, usize),
    Atom(Atom, usize),
    Group(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub neg: bool,
    pub factors: Vec<Factor>,
}

/// Parsed syntax tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, CliError> {
        Err(CliError::Parse { pos: self.pos(), expected: expected.into(), found: self.peek().to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&format!("'{c}'"))
        }
    }

    fn int(&mut self) -> Result<BigInt, CliError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.at += 1;
                Ok(n)
            }
            _ => self.fail("an integer"),
        }
    }

    fn small(&mut self) -> Result<usize, CliError> {
        let pos = self.pos();
        let n = self.int()?;
        usize::try_from(&n).ok().filter(|&v| v <= 64).ok_or(CliError::Parse {
            pos,
            expected: "an index of at most 64".into(),
            found: n.to_string(),
        })
    }

    fn signed_exponent(&mut self) -> Result<i64, CliError> {
        if !self.eat('^') {
            return Ok(1);
        }
        let neg = self.eat('-');
        let pos = self.pos();
        let n = self.int()?;
        let v = i64::try_from(&n).ok().filter(|v| *v <= 1024).ok_or(CliError::Parse {
            pos,
            expected: "an exponent of at most 1024".into(),
            found: n.to_string(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut terms = Vec::new();
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            terms.push(Term { neg, factors: self.term()? });
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(Expr { terms })
    }

    fn term(&mut self) -> Result<Vec<Factor>, CliError> {
        let mut factors = vec![self.factor()?];
        loop {
            if self.eat('*') {
                factors.push(self.factor()?);
                continue;
            }
            match self.peek() {
                Tok::Int(_) | Tok::Word(_) | Tok::Sym('(') | Tok::Sym('[') => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(factors)
    }

    fn factor(&mut self) -> Result<Factor, CliError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.at += 1;
                let mut r = BigRational::from_integer(n);
                if self.eat('/') {
                    let dpos = self.pos();
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(CliError::Parse {
                            pos: dpos,
                            expected: "a nonzero denominator".into(),
                            found: "0".into(),
                        });
                    }
                    r /= BigRational::from_integer(d);
                }
                Ok(Factor::Scalar(Coeff { rational: r, q: 0, z: 0 }, pos))
            }
            Tok::Sym('(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Factor::Group(e))
            }
            Tok::Sym('[') => {
                self.at += 1;
                let mut entries = vec![self.bentry()?];
                while self.eat(',') {
                    entries.push(self.bentry()?);
                }
                self.expect(']')?;
                Ok(Factor::Atom(Atom::Tensor(entries), pos))
            }
            Tok::Word(w) => {
                self.at += 1;
                self.word_factor(&w, pos)
            }
            _ => self.fail("a scalar, generator, tensor or '('"),
        }
    }

    fn word_factor(&mut self, w: &str, pos: usize) -> Result<Factor, CliError> {
        let one = BigRational::one();
        match w {
            "p" | "q" if *self.peek() == Tok::Sym('[') => {
                self.at += 1;
                let node = self.small()?;
                self.expect(',')?;
                let level = self.small()? as u32;
                self.expect(']')?;
                let atom = if w == "p" { Atom::P(node, level) } else { Atom::Q(node, level) };
                Ok(Factor::Atom(atom, pos))
            }
            "q" => Ok(Factor::Scalar(Coeff { rational: one, q: self.signed_exponent()?, z: 0 }, pos)),
            "z" => Ok(Factor::Scalar(Coeff { rational: one, q: 0, z: self.signed_exponent()? }, pos)),
            _ => {
                let (head, digits) = w.split_at(1);
                let idx = if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
                    digits.parse::<usize>().ok().filter(|&i| i <= 64)
                } else {
                    None
                };
                match (head, idx) {
                    ("s", Some(i)) => Ok(Factor::Atom(Atom::S(i), pos)),
                    ("c", Some(i)) => Ok(Factor::Atom(Atom::C(i), pos)),
                    _ => Err(CliError::Parse {
                        pos,
                        expected: "s<i>, c<i>, p[i,m], q[i,m], q, z or a number".into(),
                        found: format!("'{w}'"),
                    }),
                }
            }
        }
    }

    fn bentry(&mut self) -> Result<BGammaBasisElem, CliError> {
        let ext = match self.peek().clone() {
            Tok::Int(n) if n.is_one() => Ext::One,
            Tok::Word(w) if matches!(w.as_str(), "v1" | "v2" | "w") => Ext::parse(&w).expect("known name"),
            _ => return self.fail("one of 1, v1, v2, w"),
        };
        self.at += 1;
        let mut g = 0;
        if self.eat('*') {
            match self.bump() {
                Tok::Word(w) if w == "g" => {}
                _ => {
                    self.at -= 1;
                    return self.fail("'g'");
                }
            }
            self.expect('^')?;
            g = self.small()? as u32;
        }
        Ok(BGammaBasisElem::new(ext, g))
    }
}

/// Parses the syntax tree without interpreting it.
pub fn parse_expr(src: &str) -> Result<Expr, CliError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("'+', '-' or end of input");
    }
    Ok(e)
}

/// How to interpret a parsed expression.
#[derive(Clone, Debug)]
pub struct ParseOptions {
    /// Rank override; otherwise the smallest rank that fits every index.
    pub n: Option<usize>,
    pub ell: u32,
    pub max_rank: usize,
    pub cartan: CartanData,
}

impl ParseOptions {
    pub fn new(ell: u32) -> Self {
        ParseOptions { n: None, ell, max_rank: 3, cartan: CartanData::type_a(2) }
    }
}

/// Either kind of element.
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    Wreath(WreathElem),
    Heisenberg(HeisenNF),
}

impl Element {
    pub fn render(&self) -> String {
        match self {
            Element::Wreath(x) => x.render(),
            Element::Heisenberg(x) => x.to_string(),
        }
    }
}

#[derive(Default)]
struct Usage {
    wreath: Option<usize>,
    heis: Option<usize>,
    needed: usize,
    tensor: Option<(usize, usize)>,
    conflict: Option<String>,
}

fn scan(e: &Expr, u: &mut Usage) {
    for t in &e.terms {
        for f in &t.factors {
            match f {
                Factor::Scalar(c, pos) => {
                    if c.z != 0 {
                        u.wreath.get_or_insert(*pos);
                    }
                    if c.q != 0 {
                        u.heis.get_or_insert(*pos);
                    }
                }
                Factor::Group(g) => scan(g, u),
                Factor::Atom(a, pos) => match a {
                    Atom::S(i) => {
                        u.wreath.get_or_insert(*pos);
                        u.needed = u.needed.max(i + 1);
                    }
                    Atom::C(i) => {
                        u.wreath.get_or_insert(*pos);
                        u.needed = u.needed.max(*i);
                    }
                    Atom::Tensor(v) => {
                        u.wreath.get_or_insert(*pos);
                        match u.tensor {
                            Some((len, _)) if len != v.len() => {
                                u.conflict.get_or_insert(format!(
                                    "tensors of length {len} and {} at column {}",
                                    v.len(),
                                    pos + 1
                                ));
                            }
                            _ => u.tensor = Some((v.len(), *pos)),
                        }
                    }
                    Atom::P(..) | Atom::Q(..) => {
                        u.heis.get_or_insert(*pos);
                    }
                },
            }
        }
    }
}

fn zero_index(e: &Expr) -> Option<usize> {
    e.terms.iter().flat_map(|t| &t.factors).find_map(|f| match f {
        Factor::Atom(Atom::S(0) | Atom::C(0), pos) => Some(*pos),
        Factor::Group(g) => zero_index(g),
        _ => None,
    })
}

fn coeff_scalar(c: &Coeff, ell: u32) -> CycloScalar {
    &CycloScalar::from_rational(c.rational.clone(), ell) * &CycloScalar::zeta_pow(ell, c.z)
}

fn eval_wreath(e: &Expr, n: usize, ell: u32) -> heiscat::Result<WreathElem> {
    let mut acc = WreathElem::zero(ell, n);
    for t in &e.terms {
        let mut x = WreathElem::one(ell, n);
        for f in &t.factors {
            x = match f {
                Factor::Scalar(c, _) => x.scale(&coeff_scalar(c, ell)),
                Factor::Group(g) => heiscat::wreath::mult(&x, &eval_wreath(g, n, ell)?)?,
                Factor::Atom(a, _) => {
                    let y = match a {
                        Atom::S(i) => WreathElem::s(ell, n, *i),
                        Atom::C(i) => WreathElem::c(ell, n, *i),
                        Atom::Tensor(v) => {
                            let v: Vec<BGammaBasisElem> =
                                v.iter().map(|b| BGammaBasisElem::new(b.ext, b.g % ell)).collect();
                            let w = WreathBasisWord::new(&v, ell, CliffordMono::one(n), Permutation::identity(n));
                            WreathElem::from_word(ell, w)
                        }
                        Atom::P(..) | Atom::Q(..) => unreachable!("kinds are checked before evaluation"),
                    };
                    heiscat::wreath::mult(&x, &y)?
                }
            };
        }
        acc = if t.neg { &acc - &x } else { &acc + &x };
    }
    Ok(acc)
}

type WordSum = Vec<(LaurentPoly, Vec<HeisenGen>)>;

fn eval_words(e: &Expr) -> WordSum {
    let mut out = Vec::new();
    for t in &e.terms {
        let sign = if t.neg { -1 } else { 1 };
        let mut cur: WordSum = vec![(LaurentPoly::from_int(sign), Vec::new())];
        for f in &t.factors {
            let rhs: WordSum = match f {
                Factor::Scalar(c, _) => {
                    vec![(LaurentPoly::monomial(CycloScalar::from_rational(c.rational.clone(), 1), c.q), Vec::new())]
                }
                Factor::Atom(Atom::P(i, m), _) => vec![(LaurentPoly::one(), vec![HeisenGen::p(*i, *m)])],
                Factor::Atom(Atom::Q(i, m), _) => vec![(LaurentPoly::one(), vec![HeisenGen::q(*i, *m)])],
                Factor::Atom(..) => unreachable!("kinds are checked before evaluation"),
                Factor::Group(g) => eval_words(g),
            };
            let mut next = Vec::with_capacity(cur.len() * rhs.len());
            for (c1, w1) in &cur {
                for (c2, w2) in &rhs {
                    let mut w = w1.clone();
                    w.extend_from_slice(w2);
                    next.push((c1 * c2, w));
                }
            }
            cur = next;
        }
        out.extend(cur);
    }
    out
}

/// Parses and evaluates an expression; Heisenberg words are brought to normal form.
pub fn parse_element(src: &str, opts: &ParseOptions) -> Result<Element, CliError> {
    let e = parse_expr(src)?;
    let mut u = Usage::default();
    scan(&e, &mut u);
    if let (Some(a), Some(b)) = (u.wreath, u.heis) {
        return Err(CliError::MixedKinds { wreath: a, heisenberg: b });
    }
    if let Some(pos) = zero_index(&e) {
        return Err(CliError::Parse { pos, expected: "an index of at least 1".into(), found: "0".into() });
    }
    if u.heis.is_some() {
        let mut nf = HeisenNF::zero();
        for (c, w) in eval_words(&e) {
            nf = nf.add(&normal_form(&w, &opts.cartan)?.scale(&c));
        }
        return Ok(Element::Heisenberg(nf));
    }
    if let Some(c) = u.conflict {
        return Err(CliError::RankConflict(c));
    }
    let n = match (opts.n, u.tensor) {
        (Some(n), Some((len, pos))) if n != len => {
            return Err(CliError::RankConflict(format!(
                "rank {n} requested but the tensor at column {} has {len} entries",
                pos + 1
            )))
        }
        (Some(n), _) => n,
        (None, Some((len, _))) => len,
        (None, None) => u.needed,
    };
    if n < u.needed {
        return Err(CliError::RankConflict(format!("rank {n} is too small for the indices used (need {})", u.needed)));
    }
    if n > opts.max_rank {
        return Err(CliError::Config(format!("rank {n} exceeds the cap {}", opts.max_rank)));
    }
    Ok(Element::Wreath(eval_wreath(&e, n, opts.ell)?))
}

/// Product of two elements of the same kind.
pub fn multiply(x: &Element, y: &Element, cartan: &CartanData) -> Result<Element, CliError> {
    match (x, y) {
        (Element::Wreath(a), Element::Wreath(b)) => Ok(Element::Wreath(heiscat::wreath::mult(a, b)?)),
        (Element::Heisenberg(a), Element::Heisenberg(b)) => {
            Ok(Element::Heisenberg(heiscat::heisenberg::product(a, b, cartan)?))
        }
        _ => Err(CliError::KindMismatch),
    }
}
