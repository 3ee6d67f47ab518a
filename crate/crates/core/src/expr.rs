//! Propositional formulas over variables `x1..xn`.
//!
//! Grammar (loosest to tightest binding): `|` disjunction, `^` exclusive-or,
//! `&` conjunction, `!` negation, then atoms `x<i>`, `0`, `1` and
//! parenthesised groups. The binary operators are left-associative and
//! parsed into flattened n-ary nodes.

use crate::error::{Error, Result};

/// Abstract syntax tree of a propositional formula.
///
/// Variable indices are 1-based. N-ary nodes always have at least two
/// children; the parser never nests an operator directly under itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoolExpr {
    Const(bool),
    Var(usize),
    Not(Box<BoolExpr>),
    And(Vec<BoolExpr>),
    Or(Vec<BoolExpr>),
    Xor(Vec<BoolExpr>),
}

impl BoolExpr {
    /// Largest variable index appearing in the formula (0 for constants).
    pub fn max_var(&self) -> usize {
        match self {
            BoolExpr::Const(_) => 0,
            BoolExpr::Var(i) => *i,
            BoolExpr::Not(e) => e.max_var(),
            BoolExpr::And(es) | BoolExpr::Or(es) | BoolExpr::Xor(es) => {
                es.iter().map(|e| e.max_var()).max().unwrap_or(0)
            }
        }
    }

    /// Evaluates under an assignment where `assignment[i]` is the value of
    /// variable `x(i+1)`.
    pub fn eval(&self, assignment: &[bool]) -> bool {
        match self {
            BoolExpr::Const(b) => *b,
            BoolExpr::Var(i) => assignment[*i - 1],
            BoolExpr::Not(e) => !e.eval(assignment),
            BoolExpr::And(es) => es.iter().all(|e| e.eval(assignment)),
            BoolExpr::Or(es) => es.iter().any(|e| e.eval(assignment)),
            BoolExpr::Xor(es) => es.iter().fold(false, |acc, e| acc ^ e.eval(assignment)),
        }
    }

    /// Rewrites every exclusive-or into and/or/not form
    /// (`a ^ b = a & !b | !a & b`, folded left over n-ary nodes), so that
    /// downstream minterm-level processing only sees negation, conjunction
    /// and disjunction.
    pub fn eliminate_xor(&self) -> BoolExpr {
        match self {
            BoolExpr::Const(b) => BoolExpr::Const(*b),
            BoolExpr::Var(i) => BoolExpr::Var(*i),
            BoolExpr::Not(e) => BoolExpr::Not(Box::new(e.eliminate_xor())),
            BoolExpr::And(es) => BoolExpr::And(es.iter().map(|e| e.eliminate_xor()).collect()),
            BoolExpr::Or(es) => BoolExpr::Or(es.iter().map(|e| e.eliminate_xor()).collect()),
            BoolExpr::Xor(es) => {
                let mut acc = es[0].eliminate_xor();
                for e in &es[1..] {
                    let rhs = e.eliminate_xor();
                    acc = BoolExpr::Or(vec![
                        BoolExpr::And(vec![acc.clone(), BoolExpr::Not(Box::new(rhs.clone()))]),
                        BoolExpr::And(vec![BoolExpr::Not(Box::new(acc)), rhs]),
                    ]);
                }
                acc
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            BoolExpr::Const(_) | BoolExpr::Var(_) => 4,
            BoolExpr::Not(_) => 3,
            BoolExpr::And(_) => 2,
            BoolExpr::Xor(_) => 1,
            BoolExpr::Or(_) => 0,
        }
    }

    fn fmt_prec(&self, f: &mut std::fmt::Formatter<'_>, parent: u8) -> std::fmt::Result {
        let prec = self.precedence();
        let parens = prec < parent;
        if parens {
            write!(f, "(")?;
        }
        match self {
            BoolExpr::Const(b) => write!(f, "{}", if *b { 1 } else { 0 })?,
            BoolExpr::Var(i) => write!(f, "x{i}")?,
            BoolExpr::Not(e) => {
                write!(f, "!")?;
                e.fmt_prec(f, prec + 1)?;
            }
            BoolExpr::And(es) | BoolExpr::Or(es) | BoolExpr::Xor(es) => {
                let sep = match self {
                    BoolExpr::And(_) => " & ",
                    BoolExpr::Xor(_) => " ^ ",
                    _ => " | ",
                };
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, "{sep}")?;
                    }
                    e.fmt_prec(f, prec + 1)?;
                }
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl std::fmt::Display for BoolExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Parses a formula over variables `x1..x<n_vars>`.
///
/// Reports syntax errors and out-of-range variables with their 1-based
/// character position in `text`.
pub fn parse_expr(text: &str, n_vars: usize) -> Result<BoolExpr> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        n_vars,
    };
    let expr = parser.parse_or()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.error(format!("unexpected '{}'", parser.chars[parser.pos])));
    }
    Ok(expr)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    n_vars: usize,
}

impl Parser {
    fn error(&self, msg: String) -> Error {
        Error::Parse {
            pos: self.pos + 1,
            msg,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_or(&mut self) -> Result<BoolExpr> {
        let mut terms = vec![self.parse_xor()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            terms.push(self.parse_xor()?);
        }
        Ok(flatten(terms, BoolExpr::Or))
    }

    fn parse_xor(&mut self) -> Result<BoolExpr> {
        let mut terms = vec![self.parse_and()?];
        while self.peek() == Some('^') {
            self.pos += 1;
            terms.push(self.parse_and()?);
        }
        Ok(flatten(terms, BoolExpr::Xor))
    }

    fn parse_and(&mut self) -> Result<BoolExpr> {
        let mut terms = vec![self.parse_unary()?];
        while self.peek() == Some('&') {
            self.pos += 1;
            terms.push(self.parse_unary()?);
        }
        Ok(flatten(terms, BoolExpr::And))
    }

    fn parse_unary(&mut self) -> Result<BoolExpr> {
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(BoolExpr::Not(Box::new(self.parse_unary()?)))
            }
            _ => self.parse_atom(),
        }
    }

    fn parse_atom(&mut self) -> Result<BoolExpr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.parse_or()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('0') => {
                self.pos += 1;
                Ok(BoolExpr::Const(false))
            }
            Some('1') => {
                self.pos += 1;
                Ok(BoolExpr::Const(true))
            }
            Some('x') => {
                let start = self.pos;
                self.pos += 1;
                let digits_from = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos == digits_from {
                    self.pos = start;
                    return Err(self.error("expected variable index after 'x'".into()));
                }
                let text: String = self.chars[digits_from..self.pos].iter().collect();
                let index: usize = text.parse().map_err(|_| Error::Parse {
                    pos: start + 1,
                    msg: format!("invalid variable index '{text}'"),
                })?;
                if index == 0 || index > self.n_vars {
                    return Err(Error::Parse {
                        pos: start + 1,
                        msg: format!("variable x{index} out of range 1..={}", self.n_vars),
                    });
                }
                Ok(BoolExpr::Var(index))
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }
}

fn flatten(terms: Vec<BoolExpr>, build: fn(Vec<BoolExpr>) -> BoolExpr) -> BoolExpr {
    if terms.len() == 1 {
        terms.into_iter().next().unwrap()
    } else {
        build(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_basic_operators() {
        assert_eq!(
            parse_expr("x1 | x2", 2).unwrap(),
            BoolExpr::Or(vec![BoolExpr::Var(1), BoolExpr::Var(2)])
        );
        assert_eq!(
            parse_expr("!x3", 3).unwrap(),
            BoolExpr::Not(Box::new(BoolExpr::Var(3)))
        );
        assert_eq!(
            parse_expr("x1 & !x2 | x3", 3).unwrap(),
            BoolExpr::Or(vec![
                BoolExpr::And(vec![
                    BoolExpr::Var(1),
                    BoolExpr::Not(Box::new(BoolExpr::Var(2)))
                ]),
                BoolExpr::Var(3)
            ])
        );
    }

    #[test]
    fn parses_constants_and_parens() {
        assert_eq!(parse_expr("0", 1).unwrap(), BoolExpr::Const(false));
        assert_eq!(
            parse_expr("(x1 | x2) & x3", 3).unwrap(),
            BoolExpr::And(vec![
                BoolExpr::Or(vec![BoolExpr::Var(1), BoolExpr::Var(2)]),
                BoolExpr::Var(3)
            ])
        );
    }

    #[test]
    fn xor_sits_between_and_and_or() {
        // x1 | x2 ^ x3 & x4  parses as  x1 | (x2 ^ (x3 & x4))
        assert_eq!(
            parse_expr("x1 | x2 ^ x3 & x4", 4).unwrap(),
            BoolExpr::Or(vec![
                BoolExpr::Var(1),
                BoolExpr::Xor(vec![
                    BoolExpr::Var(2),
                    BoolExpr::And(vec![BoolExpr::Var(3), BoolExpr::Var(4)])
                ])
            ])
        );
    }

    #[test]
    fn reports_positions() {
        match parse_expr("x1 & ", 2).unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 6),
            other => panic!("unexpected error {other:?}"),
        }
        match parse_expr("x1 | x9", 2).unwrap_err() {
            Error::Parse { pos, msg } => {
                assert_eq!(pos, 6);
                assert!(msg.contains("x9"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_expr("x0", 2).is_err());
        assert!(parse_expr("x1 x2", 2).is_err());
    }

    #[test]
    fn eval_matches_operator_semantics() {
        let or = parse_expr("x1 | x2", 2).unwrap();
        assert!(or.eval(&[true, false]));
        let and = parse_expr("x1 & x2", 2).unwrap();
        assert!(!and.eval(&[true, false]));
        let not = parse_expr("!x3", 3).unwrap();
        assert!(!not.eval(&[false, false, true]));
    }

    #[test]
    fn xor_elimination_preserves_semantics() {
        let e = parse_expr("x1 ^ x2 ^ x3 | x1 & x2", 3).unwrap();
        let rewritten = e.eliminate_xor();
        assert!(!format!("{rewritten:?}").contains("Xor"));
        for k in 0..8u32 {
            let a = [(k & 4) != 0, (k & 2) != 0, (k & 1) != 0];
            assert_eq!(e.eval(&a), rewritten.eval(&a), "assignment {a:?}");
        }
    }

    #[test]
    fn display_uses_minimal_parens() {
        let e = parse_expr("x1 & !x2 | x3", 3).unwrap();
        assert_eq!(e.to_string(), "x1 & !x2 | x3");
        let e = parse_expr("(x1|x2)&x3", 3).unwrap();
        assert_eq!(e.to_string(), "(x1 | x2) & x3");
        let e = parse_expr("!(x1 & x2)", 2).unwrap();
        assert_eq!(e.to_string(), "!(x1 & x2)");
    }

    fn arb_expr(n_vars: usize) -> impl Strategy<Value = BoolExpr> {
        let leaf = prop_oneof![
            (1..=n_vars).prop_map(BoolExpr::Var),
            any::<bool>().prop_map(BoolExpr::Const),
        ];
        leaf.prop_recursive(4, 48, 4, |inner| {
            prop_oneof![
                inner.clone().prop_map(|e| BoolExpr::Not(Box::new(e))),
                prop::collection::vec(inner.clone(), 2..4).prop_map(BoolExpr::And),
                prop::collection::vec(inner.clone(), 2..4).prop_map(BoolExpr::Or),
                prop::collection::vec(inner, 2..4).prop_map(BoolExpr::Xor),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_round_trips(e in arb_expr(5)) {
            let printed = e.to_string();
            let reparsed = parse_expr(&printed, 5).unwrap();
            prop_assert_eq!(reparsed, e);
        }
    }
}
