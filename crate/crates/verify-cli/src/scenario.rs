//! The scenario DSL: a small text format declaring a field, rings, ideals,
//! modules, and assertions. Parse errors carry line and column.
//!
//! ```text
//! # comments run to end of line
//! field gf32003
//! ring R = quotient(x, y, z, w ; grevlex ; ideal(x*y))
//! ideal p = (y, z, w) in R
//! module N = transpose(P)
//! assert pd(N) == finite(1)   # paper
//! ```

use homalg::error::EngineError;
use homalg::monomial::MonomialOrder;

use crate::report::FieldChoice;

#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Paper => "paper",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Infinity,
    NoneVal,
    Finite(usize),
    AtLeast(usize),
    Witness(u32),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Int(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Infinity => "infinity".into(),
            Value::NoneVal => "none".into(),
            Value::Finite(n) => format!("finite({})", n),
            Value::AtLeast(n) => format!("atleast({})", n),
            Value::Witness(n) => format!("witness({})", n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CmpOp {
    Eq,
    Ne,
}

impl CmpOp {
    pub fn render(self) -> &'static str {
        match self {
            CmpOp::Eq => "==",
            CmpOp::Ne => "!=",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Arg {
    Call(Call),
    Name(String),
    Int(i64),
}

impl Arg {
    pub fn render(&self) -> String {
        match self {
            Arg::Call(c) => c.render(),
            Arg::Name(n) => n.clone(),
            Arg::Int(i) => i.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Call {
    pub func: String,
    pub args: Vec<Arg>,
    pub line: usize,
    pub col: usize,
}

impl Call {
    pub fn render(&self) -> String {
        let args: Vec<String> = self.args.iter().map(|a| a.render()).collect();
        format!("{}({})", self.func, args.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModExpr {
    Cyclic(String),
    Cokernel { ring: String, rows: Vec<Vec<String>>, twists: Option<Vec<i64>> },
    Transpose(String),
    Tensor(String, String),
    Syzygy(String, usize),
    Restrict(String, String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Stmt {
    Field(FieldChoice),
    Ring {
        name: String,
        vars: Vec<String>,
        order: MonomialOrder,
        ideal: Vec<String>,
        flags: Vec<String>,
    },
    Ideal {
        name: String,
        gens: Vec<String>,
        ring: String,
    },
    Module {
        name: String,
        expr: ModExpr,
    },
    Assert {
        expr: Call,
        op: CmpOp,
        value: Value,
        provenance: Provenance,
    },
    /// Free-text remark recorded in the report (e.g. scope limitations).
    Note(String),
}

#[derive(Clone, Debug, Default)]
pub struct Scenario {
    pub stmts: Vec<Stmt>,
}

impl Scenario {
    pub fn field(&self) -> Option<FieldChoice> {
        self.stmts.iter().find_map(|s| match s {
            Stmt::Field(f) => Some(*f),
            _ => None,
        })
    }
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> EngineError {
        EngineError::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    /// Skip spaces and comments. A comment on the same line as an assert is
    /// captured separately by `line_comment_word`.
    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some(b' ' | b'\t' | b'\r' | b'\n') => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    /// Skip spaces on the current line only; returns the first word of a
    /// trailing `#` comment if present before the newline.
    fn trailing_comment_word(&mut self) -> Option<String> {
        loop {
            match self.peek() {
                Some(b' ' | b'\t' | b'\r') => {
                    self.bump();
                }
                Some(b'#') => {
                    self.bump();
                    let mut text = String::new();
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        text.push(c as char);
                        self.bump();
                    }
                    return text.split_whitespace().next().map(|s| s.to_string());
                }
                _ => return None,
            }
        }
    }

    fn ident(&mut self) -> Result<String, EngineError> {
        self.skip_ws();
        let mut s = String::new();
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {}
            _ => return Err(self.err("expected an identifier")),
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'.' || c == b'-' {
                s.push(c as char);
                self.bump();
            } else {
                break;
            }
        }
        Ok(s)
    }

    fn integer(&mut self) -> Result<i64, EngineError> {
        self.skip_ws();
        let mut neg = false;
        if self.peek() == Some(b'-') {
            neg = true;
            self.bump();
        }
        let mut v: i64 = 0;
        let mut any = false;
        while let Some(d @ b'0'..=b'9') = self.peek() {
            any = true;
            v = v * 10 + (d - b'0') as i64;
            self.bump();
        }
        if !any {
            return Err(self.err("expected an integer"));
        }
        Ok(if neg { -v } else { v })
    }

    fn expect(&mut self, token: &str) -> Result<(), EngineError> {
        self.skip_ws();
        let bytes = token.as_bytes();
        if self.src.len() - self.pos >= bytes.len()
            && &self.src[self.pos..self.pos + bytes.len()] == bytes
        {
            for _ in 0..bytes.len() {
                self.bump();
            }
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", token)))
        }
    }

    fn try_token(&mut self, token: &str) -> bool {
        self.skip_ws();
        let bytes = token.as_bytes();
        if self.src.len() - self.pos >= bytes.len()
            && &self.src[self.pos..self.pos + bytes.len()] == bytes
        {
            for _ in 0..bytes.len() {
                self.bump();
            }
            true
        } else {
            false
        }
    }

    /// Raw polynomial text up to a delimiter at bracket depth zero.
    fn poly_text(&mut self) -> Result<String, EngineError> {
        self.skip_ws();
        let mut depth = 0i32;
        let mut s = String::new();
        loop {
            match self.peek() {
                None => break,
                Some(b'(') => {
                    depth += 1;
                    s.push('(');
                    self.bump();
                }
                Some(b')') if depth > 0 => {
                    depth -= 1;
                    s.push(')');
                    self.bump();
                }
                Some(b')' | b',' | b';' | b']') => break,
                Some(b'\n') if depth == 0 => break,
                Some(c) => {
                    s.push(c as char);
                    self.bump();
                }
            }
        }
        let trimmed = s.trim().to_string();
        if trimmed.is_empty() {
            return Err(self.err("expected a polynomial"));
        }
        Ok(trimmed)
    }

    fn at_eof(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }
}

fn parse_call(sc: &mut Scanner) -> Result<Call, EngineError> {
    sc.skip_ws();
    let (line, col) = (sc.line, sc.col);
    let func = sc.ident()?;
    sc.expect("(")?;
    let mut args = Vec::new();
    if !sc.try_token(")") {
        loop {
            args.push(parse_arg(sc)?);
            if sc.try_token(",") {
                continue;
            }
            sc.expect(")")?;
            break;
        }
    }
    Ok(Call { func, args, line, col })
}

fn parse_arg(sc: &mut Scanner) -> Result<Arg, EngineError> {
    sc.skip_ws();
    match sc.peek() {
        Some(c) if c.is_ascii_digit() || c == b'-' => Ok(Arg::Int(sc.integer()?)),
        _ => {
            let save = (sc.pos, sc.line, sc.col);
            let name = sc.ident()?;
            sc.skip_ws();
            if sc.peek() == Some(b'(') {
                // nested call: rewind and reparse as a call
                sc.pos = save.0;
                sc.line = save.1;
                sc.col = save.2;
                Ok(Arg::Call(parse_call(sc)?))
            } else {
                Ok(Arg::Name(name))
            }
        }
    }
}

fn parse_value(sc: &mut Scanner) -> Result<Value, EngineError> {
    sc.skip_ws();
    match sc.peek() {
        Some(c) if c.is_ascii_digit() || c == b'-' => Ok(Value::Int(sc.integer()?)),
        _ => {
            let word = sc.ident()?;
            match word.as_str() {
                "true" => Ok(Value::Bool(true)),
                "false" => Ok(Value::Bool(false)),
                "infinity" => Ok(Value::Infinity),
                "none" => Ok(Value::NoneVal),
                "finite" => {
                    sc.expect("(")?;
                    let n = sc.integer()?;
                    sc.expect(")")?;
                    Ok(Value::Finite(n as usize))
                }
                "atleast" => {
                    sc.expect("(")?;
                    let n = sc.integer()?;
                    sc.expect(")")?;
                    Ok(Value::AtLeast(n as usize))
                }
                "witness" => {
                    sc.expect("(")?;
                    let n = sc.integer()?;
                    sc.expect(")")?;
                    Ok(Value::Witness(n as u32))
                }
                other => Err(sc.err(format!("unknown value `{}`", other))),
            }
        }
    }
}

fn parse_poly_list(sc: &mut Scanner) -> Result<Vec<String>, EngineError> {
    let mut out = Vec::new();
    sc.skip_ws();
    if sc.peek() == Some(b')') {
        return Ok(out);
    }
    loop {
        out.push(sc.poly_text()?);
        if sc.try_token(",") {
            continue;
        }
        break;
    }
    Ok(out)
}

fn parse_matrix(sc: &mut Scanner) -> Result<Vec<Vec<String>>, EngineError> {
    sc.expect("[")?;
    let mut rows = Vec::new();
    loop {
        sc.expect("[")?;
        let mut row = Vec::new();
        loop {
            row.push(sc.poly_text()?);
            if sc.try_token(",") {
                continue;
            }
            sc.expect("]")?;
            break;
        }
        rows.push(row);
        if sc.try_token(",") {
            continue;
        }
        sc.expect("]")?;
        break;
    }
    Ok(rows)
}

fn parse_mod_expr(sc: &mut Scanner) -> Result<ModExpr, EngineError> {
    let head = sc.ident()?;
    sc.expect("(")?;
    let out = match head.as_str() {
        "cyclic" => {
            let name = sc.ident()?;
            sc.expect(")")?;
            ModExpr::Cyclic(name)
        }
        "cokernel" => {
            let ring = sc.ident()?;
            sc.expect(";")?;
            let rows = parse_matrix(sc)?;
            let twists = if sc.try_token(";") {
                sc.expect("twists")?;
                sc.expect("[")?;
                let mut ts = Vec::new();
                loop {
                    ts.push(sc.integer()?);
                    if sc.try_token(",") {
                        continue;
                    }
                    sc.expect("]")?;
                    break;
                }
                Some(ts)
            } else {
                None
            };
            sc.expect(")")?;
            ModExpr::Cokernel { ring, rows, twists }
        }
        "transpose" => {
            let name = sc.ident()?;
            sc.expect(")")?;
            ModExpr::Transpose(name)
        }
        "tensor" => {
            let a = sc.ident()?;
            sc.expect(",")?;
            let b = sc.ident()?;
            sc.expect(")")?;
            ModExpr::Tensor(a, b)
        }
        "syzygy" => {
            let a = sc.ident()?;
            sc.expect(",")?;
            let n = sc.integer()?;
            sc.expect(")")?;
            ModExpr::Syzygy(a, n as usize)
        }
        "restrict" => {
            let a = sc.ident()?;
            sc.expect(",")?;
            let b = sc.ident()?;
            sc.expect(")")?;
            ModExpr::Restrict(a, b)
        }
        other => return Err(sc.err(format!("unknown module constructor `{}`", other))),
    };
    Ok(out)
}

/// Parse a scenario file.
pub fn parse_scenario(src: &str) -> Result<Scenario, EngineError> {
    let mut sc = Scanner::new(src);
    let mut stmts = Vec::new();
    while !sc.at_eof() {
        let keyword = sc.ident()?;
        match keyword.as_str() {
            "field" => {
                let name = sc.ident()?;
                let f = FieldChoice::parse(&name)
                    .ok_or_else(|| sc.err(format!("unknown field `{}`", name)))?;
                stmts.push(Stmt::Field(f));
            }
            "ring" => {
                let name = sc.ident()?;
                sc.expect("=")?;
                sc.expect("quotient")?;
                sc.expect("(")?;
                let mut vars = Vec::new();
                loop {
                    vars.push(sc.ident()?);
                    if sc.try_token(",") {
                        continue;
                    }
                    break;
                }
                sc.expect(";")?;
                let order_name = sc.ident()?;
                let order = MonomialOrder::parse(&order_name)
                    .ok_or_else(|| sc.err(format!("unknown order `{}`", order_name)))?;
                sc.expect(";")?;
                sc.expect("ideal")?;
                sc.expect("(")?;
                let ideal = parse_poly_list(&mut sc)?;
                sc.expect(")")?;
                sc.expect(")")?;
                let mut flags = Vec::new();
                if sc.try_token("flags") {
                    sc.expect("{")?;
                    loop {
                        flags.push(sc.ident()?);
                        if sc.try_token(",") {
                            continue;
                        }
                        sc.expect("}")?;
                        break;
                    }
                }
                stmts.push(Stmt::Ring { name, vars, order, ideal, flags });
            }
            "ideal" => {
                let name = sc.ident()?;
                sc.expect("=")?;
                sc.expect("(")?;
                let gens = parse_poly_list(&mut sc)?;
                sc.expect(")")?;
                sc.expect("in")?;
                let ring = sc.ident()?;
                stmts.push(Stmt::Ideal { name, gens, ring });
            }
            "module" => {
                let name = sc.ident()?;
                sc.expect("=")?;
                let expr = parse_mod_expr(&mut sc)?;
                stmts.push(Stmt::Module { name, expr });
            }
            "note" => {
                let mut text = String::new();
                while let Some(c) = sc.peek() {
                    if c == b'\n' {
                        break;
                    }
                    text.push(c as char);
                    sc.bump();
                }
                stmts.push(Stmt::Note(text.trim().to_string()));
            }
            "assert" => {
                let expr = parse_call(&mut sc)?;
                sc.skip_ws();
                let op = if sc.try_token("==") {
                    CmpOp::Eq
                } else if sc.try_token("!=") {
                    CmpOp::Ne
                } else {
                    return Err(sc.err("expected `==` or `!=`"));
                };
                let value = parse_value(&mut sc)?;
                let provenance = match sc.trailing_comment_word().as_deref() {
                    Some("paper") => Provenance::Paper,
                    Some("trivial") => Provenance::Trivial,
                    _ => Provenance::Derived,
                };
                stmts.push(Stmt::Assert { expr, op, value, provenance });
            }
            other => {
                return Err(sc.err(format!("unknown statement `{}`", other)));
            }
        }
    }
    Ok(Scenario { stmts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_small_scenario() {
        let src = r#"
            # counterexample data
            field gf32003
            ring R = quotient(x, y, z, w ; grevlex ; ideal(x*y))
            ideal p = (y, z, w) in R
            module P = cyclic(p)
            module N = transpose(P)
            assert pd(N) == finite(1)  # paper
            assert tor(M, N, 1) == 0   # paper comment text
            assert rank(N) != 3
        "#;
        let sc = parse_scenario(src).unwrap();
        assert_eq!(sc.field(), Some(FieldChoice::Gf32003));
        assert_eq!(sc.stmts.len(), 8);
        match &sc.stmts[5] {
            Stmt::Assert { expr, op, value, provenance } => {
                assert_eq!(expr.render(), "pd(N)");
                assert_eq!(*op, CmpOp::Eq);
                assert_eq!(*value, Value::Finite(1));
                assert_eq!(*provenance, Provenance::Paper);
            }
            other => panic!("unexpected {:?}", other),
        }
        match &sc.stmts[7] {
            Stmt::Assert { provenance, .. } => assert_eq!(*provenance, Provenance::Derived),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn parse_cokernel_with_twists() {
        let src = "module M = cokernel(R ; [[x, y^2], [z, w*w]] ; twists [0, 1])";
        let sc = parse_scenario(src).unwrap();
        match &sc.stmts[0] {
            Stmt::Module { expr: ModExpr::Cokernel { ring, rows, twists }, .. } => {
                assert_eq!(ring, "R");
                assert_eq!(rows.len(), 2);
                assert_eq!(rows[0], vec!["x".to_string(), "y^2".to_string()]);
                assert_eq!(twists.as_deref(), Some(&[0i64, 1][..]));
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn parse_nested_call() {
        let src = "assert is_zero(tor(M, N, 1)) == true";
        let sc = parse_scenario(src).unwrap();
        match &sc.stmts[0] {
            Stmt::Assert { expr, .. } => {
                assert_eq!(expr.render(), "is_zero(tor(M, N, 1))");
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn error_carries_position() {
        let err = parse_scenario("ring R = quotient(x y ; grevlex ; ideal())").unwrap_err();
        match err {
            EngineError::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col > 1);
            }
            other => panic!("unexpected {:?}", other),
        }
    }
}
