//! Linear proof chains: a one-line DSL, a reachability closure over the
//! chain's links, and a classifier for the shape of the argument.
//!
//! ```text
//! chain     := term (connective term)+
//! term      := literal | "FALSUM" | "(" literal "&" literal ")"
//! literal   := "~"? ident
//! ident     := [A-Za-z][A-Za-z0-9]*
//! connective:= "=>" | "<=>"
//! ```
//!
//! `(R & ~R)` and `FALSUM` both denote a contradiction and may only close a
//! chain. Whitespace is ignored.
//!
//! A statement is *inconceivable* within a chain when, following the links
//! (`=>` one way, `<=>` both ways), it reaches both `X` and `~X` for some
//! statement `X` named in the chain. Reaching the contradiction does not
//! count: nothing follows from `FALSUM`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("empty chain")]
    Empty,
    #[error("unknown token {found:?} at byte {pos}")]
    UnknownToken { pos: usize, found: char },
    #[error("connective at byte {pos} has no statement after it")]
    DanglingConnective { pos: usize },
    #[error("expected a statement at byte {pos}")]
    ExpectedStatement { pos: usize },
    #[error("expected a connective at byte {pos}; only linear chains are supported")]
    ExpectedConnective { pos: usize },
    #[error("a chain needs at least one connective")]
    NoLinks,
    #[error("contradiction must pair a statement with its negation: {0}")]
    MismatchedContradiction(String),
    #[error("a contradiction may only close the chain")]
    FalsumNotTerminal,
    #[error("double negation at byte {pos}")]
    DoubleNegation { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Statement {
    pub name: String,
    pub negated: bool,
}

impl Statement {
    pub fn new(name: impl Into<String>, negated: bool) -> Self {
        Self {
            name: name.into(),
            negated,
        }
    }

    pub fn negation(&self) -> Self {
        Self::new(self.name.clone(), !self.negated)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("~")?;
        }
        f.write_str(&self.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Stmt(Statement),
    /// An always-false conjunction; `Some(R)` when written as `(R & ~R)`.
    Falsum(Option<String>),
}

impl Node {
    pub fn statement(&self) -> Option<&Statement> {
        match self {
            Node::Stmt(s) => Some(s),
            Node::Falsum(_) => None,
        }
    }

    fn is_falsum(&self) -> bool {
        matches!(self, Node::Falsum(_))
    }

    /// Graph identity: every contradiction is the same vertex.
    fn key(&self) -> Option<&Statement> {
        self.statement()
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Stmt(s) => s.fmt(f),
            Node::Falsum(None) => f.write_str("FALSUM"),
            Node::Falsum(Some(r)) => write!(f, "({r} & ~{r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    Implies,
    Iff,
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connective::Implies => "=>",
            Connective::Iff => "<=>",
        })
    }
}

/// `links[t]` joins `nodes[t]` to `nodes[t + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    nodes: Vec<Node>,
    links: Vec<Connective>,
}

impl Chain {
    pub fn new(nodes: Vec<Node>, links: Vec<Connective>) -> Result<Self, ChainError> {
        if nodes.is_empty() {
            return Err(ChainError::Empty);
        }
        if links.is_empty() {
            return Err(ChainError::NoLinks);
        }
        if links.len() + 1 != nodes.len() {
            return Err(ChainError::DanglingConnective { pos: 0 });
        }
        if nodes[..nodes.len() - 1].iter().any(Node::is_falsum) {
            return Err(ChainError::FalsumNotTerminal);
        }
        Ok(Self { nodes, links })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn links(&self) -> &[Connective] {
        &self.links
    }

    pub fn start(&self) -> &Node {
        &self.nodes[0]
    }

    pub fn terminal(&self) -> &Node {
        self.nodes.last().expect("chains have at least two nodes")
    }

    /// Nodes strictly between the start and the terminal.
    pub fn intermediates(&self) -> &[Node] {
        &self.nodes[1..self.nodes.len() - 1]
    }

    /// Canonical single-line text.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.nodes[0])?;
        for (link, node) in self.links.iter().zip(&self.nodes[1..]) {
            write!(f, " {link} {node}")?;
        }
        Ok(())
    }
}

impl FromStr for Chain {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Tilde,
    Implies,
    Iff,
    Falsum,
    LParen,
    RParen,
    Amp,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ChainError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '~' | '(' | ')' | '&' => {
                chars.next();
                out.push((
                    pos,
                    match c {
                        '~' => Tok::Tilde,
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        _ => Tok::Amp,
                    },
                ));
            }
            '=' | '<' => {
                let rest = &text[pos..];
                let (tok, len) = if rest.starts_with("=>") {
                    (Tok::Implies, 2)
                } else if rest.starts_with("<=>") {
                    (Tok::Iff, 3)
                } else {
                    return Err(ChainError::UnknownToken { pos, found: c });
                };
                for _ in 0..len {
                    chars.next();
                }
                out.push((pos, tok));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if !c.is_ascii_alphanumeric() {
                        break;
                    }
                    name.push(c);
                    chars.next();
                }
                let tok = if name == "FALSUM" {
                    Tok::Falsum
                } else {
                    Tok::Ident(name)
                };
                out.push((pos, tok));
            }
            other => return Err(ChainError::UnknownToken { pos, found: other }),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn literal(&mut self) -> Result<Statement, ChainError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Tilde) => match self.bump() {
                Some(Tok::Ident(name)) => Ok(Statement::new(name, true)),
                Some(Tok::Tilde) => Err(ChainError::DoubleNegation { pos }),
                _ => Err(ChainError::ExpectedStatement { pos: pos + 1 }),
            },
            Some(Tok::Ident(name)) => Ok(Statement::new(name, false)),
            _ => Err(ChainError::ExpectedStatement { pos }),
        }
    }

    fn term(&mut self) -> Result<Node, ChainError> {
        match self.peek() {
            Some(Tok::Falsum) => {
                self.bump();
                Ok(Node::Falsum(None))
            }
            Some(Tok::LParen) => {
                self.bump();
                let a = self.literal()?;
                if self.bump() != Some(Tok::Amp) {
                    return Err(ChainError::MismatchedContradiction("missing '&'".into()));
                }
                let b = self.literal()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(ChainError::MismatchedContradiction("missing ')'".into()));
                }
                if a.name != b.name || a.negated == b.negated {
                    return Err(ChainError::MismatchedContradiction(format!("({a} & {b})")));
                }
                Ok(Node::Falsum(Some(a.name)))
            }
            _ => self.literal().map(Node::Stmt),
        }
    }
}

pub fn parse(text: &str) -> Result<Chain, ChainError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ChainError::Empty);
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let mut nodes = vec![p.term()?];
    let mut links = Vec::new();
    while let Some(tok) = p.peek() {
        let pos = p.pos();
        let link = match tok {
            Tok::Implies => Connective::Implies,
            Tok::Iff => Connective::Iff,
            _ => return Err(ChainError::ExpectedConnective { pos }),
        };
        p.bump();
        if p.peek().is_none() {
            return Err(ChainError::DanglingConnective { pos });
        }
        links.push(link);
        nodes.push(p.term()?);
    }
    Chain::new(nodes, links)
}

/// Reflexive-transitive closure of the chain's links over its distinct
/// statements and (at most one) contradiction vertex.
#[derive(Debug, Clone)]
pub struct Reachability {
    vertices: Vec<Node>,
    reach: Vec<Vec<bool>>,
}

impl Reachability {
    pub fn vertices(&self) -> &[Node] {
        &self.vertices
    }

    fn index(&self, node: &Node) -> Option<usize> {
        self.vertices.iter().position(|v| v.key() == node.key())
    }

    pub fn reaches(&self, from: &Node, to: &Node) -> bool {
        match (self.index(from), self.index(to)) {
            (Some(a), Some(b)) => self.reach[a][b],
            _ => false,
        }
    }

    pub fn reaches_statement(&self, from: &Node, to: &Statement) -> bool {
        self.reaches(from, &Node::Stmt(to.clone()))
    }
}

pub fn closure(chain: &Chain) -> Reachability {
    let mut vertices: Vec<Node> = Vec::new();
    for n in &chain.nodes {
        if !vertices.iter().any(|v| v.key() == n.key()) {
            vertices.push(n.clone());
        }
    }
    let idx = |n: &Node| vertices.iter().position(|v| v.key() == n.key()).unwrap();
    let mut adj = vec![Vec::new(); vertices.len()];
    for (t, link) in chain.links.iter().enumerate() {
        let (a, b) = (&chain.nodes[t], &chain.nodes[t + 1]);
        adj[idx(a)].push(idx(b));
        // nothing is derived from a contradiction
        if *link == Connective::Iff && !b.is_falsum() {
            adj[idx(b)].push(idx(a));
        }
    }
    let reach = (0..vertices.len())
        .map(|src| {
            let mut seen = vec![false; vertices.len()];
            seen[src] = true;
            let mut queue = VecDeque::from([src]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            seen
        })
        .collect();
    Reachability { vertices, reach }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub statement: Statement,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FlagReport {
    pub flagged: Vec<Flag>,
    pub warnings: Vec<String>,
}

pub const NO_COMPLEMENTARY_PAIR: &str = "no complementary pair X/~X in chain";

/// Statements `X` for which both `X` and `~X` occur in the chain, as the
/// positive member of each pair.
pub fn complementary_pairs(chain: &Chain) -> Vec<Statement> {
    let stmts: Vec<&Statement> = chain.nodes.iter().filter_map(Node::statement).collect();
    let mut pairs: Vec<Statement> = stmts
        .iter()
        .filter(|s| !s.negated && stmts.contains(&&s.negation()))
        .map(|s| (*s).clone())
        .collect();
    pairs.sort();
    pairs.dedup();
    pairs
}

/// Intermediate statements that reach both members of a complementary pair.
pub fn flag(chain: &Chain) -> FlagReport {
    let pairs = complementary_pairs(chain);
    if pairs.is_empty() {
        return FlagReport {
            flagged: Vec::new(),
            warnings: vec![NO_COMPLEMENTARY_PAIR.to_string()],
        };
    }
    let reach = closure(chain);
    let ends = [chain.start().key(), chain.terminal().key()];
    let mut flagged: Vec<Flag> = Vec::new();
    for node in chain.intermediates() {
        let Some(stmt) = node.statement() else { continue };
        if ends.contains(&Some(stmt)) || flagged.iter().any(|f| &f.statement == stmt) {
            continue;
        }
        if let Some(x) = pairs
            .iter()
            .find(|x| reach.reaches_statement(node, x) && reach.reaches_statement(node, &x.negation()))
        {
            flagged.push(Flag {
                statement: stmt.clone(),
                reason: format!("reaches both {x} and {}", x.negation()),
            });
        }
    }
    FlagReport {
        flagged,
        warnings: Vec::new(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Direct,
    ExternalReductio,
    InternalReductio,
    InvalidInternal,
    Unknown,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Direct => "DIRECT",
            VerdictKind::ExternalReductio => "EXTERNAL_REDUCTIO",
            VerdictKind::InternalReductio => "INTERNAL_REDUCTIO",
            VerdictKind::InvalidInternal => "INVALID_INTERNAL",
            VerdictKind::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub flagged: Vec<Flag>,
    pub warnings: Vec<String>,
}

impl Verdict {
    pub fn flagged_names(&self) -> Vec<String> {
        self.flagged.iter().map(|f| f.statement.to_string()).collect()
    }

    /// `key=value` lines: `kind`, `flags`, one `reason.<stmt>` per flag and
    /// one `warning` per warning.
    pub fn to_record(&self) -> String {
        let mut out = format!("kind={}\nflags={}\n", self.kind, self.flagged_names().join(","));
        for f in &self.flagged {
            out.push_str(&format!("reason.{}={}\n", f.statement, f.reason));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning={w}\n"));
        }
        out
    }
}

pub fn classify(chain: &Chain) -> Verdict {
    let flags = flag(chain);
    let mut warnings = Vec::new();
    for (t, link) in chain.links.iter().enumerate() {
        if *link == Connective::Iff && chain.nodes[t + 1].is_falsum() {
            warnings.push(format!(
                "biconditional link to terminal contradiction at {}",
                chain.nodes[t]
            ));
        }
    }
    warnings.extend(flags.warnings);

    let kind = match (chain.start(), chain.terminal()) {
        (Node::Stmt(s), Node::Stmt(_)) if !s.negated => VerdictKind::Direct,
        (Node::Stmt(s), Node::Falsum(_)) if s.negated => VerdictKind::ExternalReductio,
        (Node::Stmt(s), Node::Stmt(t)) if s.negated && *t == s.negation() => {
            if flags.flagged.is_empty() {
                VerdictKind::InternalReductio
            } else {
                VerdictKind::InvalidInternal
            }
        }
        _ => VerdictKind::Unknown,
    };
    Verdict {
        kind,
        flagged: flags.flagged,
        warnings,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub pass: bool,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn to_record(&self) -> String {
        let mut out = format!("audit={}\n", if self.pass { "pass" } else { "fail" });
        out.push_str(&self.verdict.to_record());
        for n in &self.notes {
            out.push_str(&format!("note={n}\n"));
        }
        out
    }
}

/// A chain passes when none of its intermediate statements is
/// inconceivable. An inconceivable starting assumption is tolerated for
/// reductio chains, whose purpose is to refute it.
pub fn audit(chain: &Chain) -> AuditReport {
    let verdict = classify(chain);
    let mut notes = vec!["closure derives nothing from a contradiction".to_string()];
    let pairs = complementary_pairs(chain);
    let reach = closure(chain);
    let start = chain.start();
    if pairs
        .iter()
        .any(|x| reach.reaches_statement(start, x) && reach.reaches_statement(start, &x.negation()))
    {
        let reductio = matches!(
            verdict.kind,
            VerdictKind::ExternalReductio | VerdictKind::InternalReductio | VerdictKind::InvalidInternal
        );
        notes.push(if reductio {
            format!("initial assumption {start} is inconceivable; permitted as the target of a reductio")
        } else {
            format!("initial assumption {start} is inconceivable")
        });
    }
    AuditReport {
        pass: verdict.flagged.is_empty(),
        verdict,
        notes,
    }
}
