//! The daisy-graph text format and DOT export.
//!
//! Documents are line-oriented UTF-8 with LF endings. `#` starts a
//! comment, blank lines are skipped, and the first significant line names
//! the document kind. After it, declaration lines may come in any order:
//!
//! ```text
//! adg                           # or: dg, odg
//! circles 2                     # optional double-circle count
//! vertex v triple               # triple | branch | db
//! vertex b1 branch
//! edge e1 v b1                  # slot 0 at the first endpoint
//! pair v e1.0 e2.0 pref e1.0    # pref names the arrow; forbidden in dg
//! order v e1.0 e3.0 e5.0        # odg only
//! ```
//!
//! Identifiers match `[A-Za-z0-9_]+`. Parsing is strict and two-phase:
//! first syntax, with line/column diagnostics and no recovery, then full
//! structural validation, with each violation tied back to the line that
//! declared the offending element. [`serialize`] emits the canonical form
//! — sorted declarations, canonicalized orders — and is the inverse of
//! [`parse`] up to that normalization.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::model::{
    ArrowedDaisyGraph, DaisyGraph, EdgeId, HalfEdgeRef, OrderedDaisyGraph, Pair, Slot, VertexId,
    VertexKind, Violation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DocumentKind {
    Dg,
    Adg,
    Odg,
}

impl std::fmt::Display for DocumentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DocumentKind::Dg => "dg",
            DocumentKind::Adg => "adg",
            DocumentKind::Odg => "odg",
        })
    }
}

/// A parsed document: one of the three graph kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Dg(DaisyGraph),
    Adg(ArrowedDaisyGraph),
    Odg(OrderedDaisyGraph),
}

impl Document {
    pub fn kind(&self) -> DocumentKind {
        match self {
            Document::Dg(_) => DocumentKind::Dg,
            Document::Adg(_) => DocumentKind::Adg,
            Document::Odg(_) => DocumentKind::Odg,
        }
    }

    pub fn base(&self) -> &DaisyGraph {
        match self {
            Document::Dg(g) => g,
            Document::Adg(g) => &g.base,
            Document::Odg(g) => &g.base.base,
        }
    }

    /// The arrowed view, when the document carries arrows.
    pub fn arrowed(&self) -> Option<&ArrowedDaisyGraph> {
        match self {
            Document::Dg(_) => None,
            Document::Adg(g) => Some(g),
            Document::Odg(g) => Some(&g.base),
        }
    }
}

/// A structural violation tied to the line that declared the offending
/// element, when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatedViolation {
    pub line: Option<usize>,
    pub violation: Violation,
}

impl std::fmt::Display for LocatedViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {n}: {}", self.violation),
            None => write!(f, "{}", self.violation),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid document:{}", .violations.iter().map(|v| format!("\n  {v}")).collect::<String>())]
    Invalid { violations: Vec<LocatedViolation> },
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let significant = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in significant.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &significant[s..i], column: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &significant[s..], column: s + 1 });
    }
    out
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Everything the parser gathered, plus where each element was declared.
struct Collected {
    kind: DocumentKind,
    graph: DaisyGraph,
    arrows: BTreeMap<(VertexId, Pair), HalfEdgeRef>,
    orders: BTreeMap<VertexId, [HalfEdgeRef; 3]>,
    vertex_lines: BTreeMap<VertexId, usize>,
    edge_lines: BTreeMap<EdgeId, usize>,
    pair_lines: BTreeMap<(VertexId, Pair), usize>,
    order_lines: BTreeMap<VertexId, usize>,
}

impl Collected {
    fn first_pair_line(&self, v: &VertexId) -> Option<usize> {
        self.pair_lines
            .iter()
            .filter(|((pv, _), _)| pv == v)
            .map(|(_, line)| *line)
            .min()
    }

    fn pair_line_with_half(&self, v: &VertexId, h: &HalfEdgeRef) -> Option<usize> {
        self.pair_lines
            .iter()
            .filter(|((pv, p), _)| pv == v && p.contains(h))
            .map(|(_, line)| *line)
            .min()
    }

    fn locate(&self, violation: &Violation) -> Option<usize> {
        use Violation::*;
        match violation {
            UnknownEndpoint { edge, .. } => self.edge_lines.get(edge).copied(),
            WrongDegree { vertex, .. } | MissingPairing { vertex } | OrderingMissing { vertex } => {
                self.vertex_lines.get(vertex).copied()
            }
            PairingAtNonTriple { vertex } | WrongPairCount { vertex, .. } => self
                .first_pair_line(vertex)
                .or_else(|| self.vertex_lines.get(vertex).copied()),
            PairUnknownEdge { vertex, half_edge }
            | PairForeignHalfEdge { vertex, half_edge }
            | DuplicatedInPairing { vertex, half_edge } => {
                self.pair_line_with_half(vertex, half_edge)
            }
            UncoveredByPairing { vertex, half_edge } => self
                .edge_lines
                .get(&half_edge.edge)
                .copied()
                .or_else(|| self.vertex_lines.get(vertex).copied()),
            ArrowMissing { vertex, pair }
            | ArrowOutsidePair { vertex, pair, .. }
            | ArrowForeignPair { vertex, pair } => {
                self.pair_lines.get(&(vertex.clone(), pair.clone())).copied()
            }
            OrderingAtNonTriple { vertex }
            | OrderingNotPreferred { vertex, .. }
            | OrderingDuplicate { vertex, .. } => self.order_lines.get(vertex).copied(),
        }
    }
}

fn parse_identifier(tok: &Token<'_>, line: usize, what: &str) -> Result<String, ParseError> {
    if is_identifier(tok.text) {
        Ok(tok.text.to_owned())
    } else {
        Err(syntax(line, tok.column, format!("{what} {:?} is not an identifier", tok.text)))
    }
}

fn parse_half(tok: &Token<'_>, line: usize) -> Result<HalfEdgeRef, ParseError> {
    let err = || {
        syntax(
            line,
            tok.column,
            format!("half-edge {:?} must look like <edge>.<0|1>", tok.text),
        )
    };
    let (id, slot) = tok.text.split_once('.').ok_or_else(err)?;
    if !is_identifier(id) {
        return Err(err());
    }
    let slot = match slot {
        "0" => Slot::Zero,
        "1" => Slot::One,
        _ => return Err(err()),
    };
    Ok(HalfEdgeRef::new(id, slot))
}

fn expect_tokens(
    tokens: &[Token<'_>],
    line: usize,
    line_text: &str,
    want: usize,
) -> Result<(), ParseError> {
    match tokens.len().cmp(&want) {
        std::cmp::Ordering::Less => Err(syntax(
            line,
            line_text.len() + 1,
            format!("expected {} fields after {:?}, got {}", want - 1, tokens[0].text, tokens.len() - 1),
        )),
        std::cmp::Ordering::Greater => {
            Err(syntax(line, tokens[want].column, format!("unexpected token {:?}", tokens[want].text)))
        }
        std::cmp::Ordering::Equal => Ok(()),
    }
}

/// Parse a document, or report the first syntax problem / the full list
/// of structural violations.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut kind: Option<DocumentKind> = None;
    let mut circles_line: Option<usize> = None;
    let mut c = Collected {
        kind: DocumentKind::Dg,
        graph: DaisyGraph::new(),
        arrows: BTreeMap::new(),
        orders: BTreeMap::new(),
        vertex_lines: BTreeMap::new(),
        edge_lines: BTreeMap::new(),
        pair_lines: BTreeMap::new(),
        order_lines: BTreeMap::new(),
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens = tokenize(raw);
        if tokens.is_empty() {
            continue;
        }
        let Some(kind) = kind else {
            let t = &tokens[0];
            kind = Some(match t.text {
                "dg" => DocumentKind::Dg,
                "adg" => DocumentKind::Adg,
                "odg" => DocumentKind::Odg,
                other => {
                    return Err(syntax(
                        line,
                        t.column,
                        format!("expected document kind dg, adg, or odg, got {other:?}"),
                    ))
                }
            });
            c.kind = kind.unwrap();
            if tokens.len() > 1 {
                return Err(syntax(line, tokens[1].column, format!("unexpected token {:?}", tokens[1].text)));
            }
            continue;
        };

        match tokens[0].text {
            "circles" => {
                expect_tokens(&tokens, line, raw, 2)?;
                if circles_line.is_some() {
                    return Err(syntax(line, tokens[0].column, "duplicate circles line"));
                }
                let n: u32 = tokens[1].text.parse().map_err(|_| {
                    syntax(line, tokens[1].column, format!("invalid circle count {:?}", tokens[1].text))
                })?;
                c.graph.circles = n;
                circles_line = Some(line);
            }
            "vertex" => {
                expect_tokens(&tokens, line, raw, 3)?;
                let id = VertexId::new(parse_identifier(&tokens[1], line, "vertex id")?);
                let vk = match tokens[2].text {
                    "triple" => VertexKind::Triple,
                    "branch" => VertexKind::Branch,
                    "db" => VertexKind::Db,
                    other => {
                        return Err(syntax(
                            line,
                            tokens[2].column,
                            format!("expected triple, branch, or db, got {other:?}"),
                        ))
                    }
                };
                if c.vertex_lines.contains_key(&id) {
                    return Err(syntax(line, tokens[1].column, format!("vertex {id} declared twice")));
                }
                c.vertex_lines.insert(id.clone(), line);
                c.graph.add_vertex(id, vk);
            }
            "edge" => {
                expect_tokens(&tokens, line, raw, 4)?;
                let id = EdgeId::new(parse_identifier(&tokens[1], line, "edge id")?);
                let a = VertexId::new(parse_identifier(&tokens[2], line, "endpoint")?);
                let b = VertexId::new(parse_identifier(&tokens[3], line, "endpoint")?);
                if c.edge_lines.contains_key(&id) {
                    return Err(syntax(line, tokens[1].column, format!("edge {id} declared twice")));
                }
                c.edge_lines.insert(id.clone(), line);
                c.graph.add_edge(id, a, b);
            }
            "pair" => {
                if tokens.len() != 4 && tokens.len() != 6 {
                    expect_tokens(&tokens, line, raw, 4)?;
                }
                let v = VertexId::new(parse_identifier(&tokens[1], line, "vertex id")?);
                let h1 = parse_half(&tokens[2], line)?;
                let h2 = parse_half(&tokens[3], line)?;
                let pair = Pair::new(h1, h2);
                let mut chosen = None;
                if tokens.len() == 6 {
                    if tokens[4].text != "pref" {
                        return Err(syntax(
                            line,
                            tokens[4].column,
                            format!("expected pref, got {:?}", tokens[4].text),
                        ));
                    }
                    if kind == DocumentKind::Dg {
                        return Err(syntax(line, tokens[4].column, "arrows are forbidden in a dg document"));
                    }
                    chosen = Some(parse_half(&tokens[5], line)?);
                }
                c.pair_lines.entry((v.clone(), pair.clone())).or_insert(line);
                if let Some(h) = chosen {
                    c.arrows.insert((v.clone(), pair.clone()), h);
                }
                c.graph.add_pair(v, pair);
            }
            "order" => {
                if kind != DocumentKind::Odg {
                    return Err(syntax(line, tokens[0].column, "order lines are only allowed in an odg document"));
                }
                expect_tokens(&tokens, line, raw, 5)?;
                let v = VertexId::new(parse_identifier(&tokens[1], line, "vertex id")?);
                let order = [
                    parse_half(&tokens[2], line)?,
                    parse_half(&tokens[3], line)?,
                    parse_half(&tokens[4], line)?,
                ];
                if c.order_lines.contains_key(&v) {
                    return Err(syntax(line, tokens[1].column, format!("vertex {v} ordered twice")));
                }
                c.order_lines.insert(v.clone(), line);
                c.orders.insert(v, order);
            }
            other => {
                return Err(syntax(
                    line,
                    tokens[0].column,
                    format!("unknown declaration {other:?}"),
                ))
            }
        }
    }

    let Some(kind) = kind else {
        return Err(syntax(1, 1, "missing document kind (dg, adg, or odg)"));
    };

    let (document, report) = match kind {
        DocumentKind::Dg => {
            let report = c.graph.validate();
            (Document::Dg(std::mem::take(&mut c.graph)), report)
        }
        DocumentKind::Adg => {
            let mut g = ArrowedDaisyGraph::from_base(std::mem::take(&mut c.graph));
            g.arrows = std::mem::take(&mut c.arrows);
            let report = g.validate();
            (Document::Adg(g), report)
        }
        DocumentKind::Odg => {
            let mut base = ArrowedDaisyGraph::from_base(std::mem::take(&mut c.graph));
            base.arrows = std::mem::take(&mut c.arrows);
            let mut g = OrderedDaisyGraph::from_base(base);
            g.ordering = std::mem::take(&mut c.orders);
            let report = g.validate();
            (Document::Odg(g), report)
        }
    };

    if report.is_ok() {
        Ok(document)
    } else {
        let violations = report
            .violations
            .into_iter()
            .map(|violation| LocatedViolation { line: c.locate(&violation), violation })
            .collect();
        Err(ParseError::Invalid { violations })
    }
}

/// Emit the canonical text form: kind, circles when nonzero, then
/// vertices, edges, pairs, and (for odg) canonicalized orders, each group
/// sorted. `parse` of the output reproduces the document up to order
/// canonicalization, and the output is a fixed point of parse∘serialize.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    let g = doc.base();
    out.push_str(&doc.kind().to_string());
    out.push('\n');
    if g.circles > 0 {
        out.push_str(&format!("circles {}\n", g.circles));
    }
    for (v, k) in &g.vertices {
        out.push_str(&format!("vertex {v} {k}\n"));
    }
    for (e, (a, b)) in &g.edges {
        out.push_str(&format!("edge {e} {a} {b}\n"));
    }
    let arrows = doc.arrowed().map(|adg| &adg.arrows);
    for (v, pairs) in &g.pairing {
        for pair in pairs {
            out.push_str(&format!("pair {v} {} {}", pair.lo(), pair.hi()));
            if let Some(arrows) = arrows {
                if let Some(chosen) = arrows.get(&(v.clone(), pair.clone())) {
                    out.push_str(&format!(" pref {chosen}"));
                }
            }
            out.push('\n');
        }
    }
    if let Document::Odg(o) = doc {
        let canon = o.canonicalized();
        for (v, order) in &canon.ordering {
            out.push_str(&format!("order {v} {} {} {}\n", order[0], order[1], order[2]));
        }
    }
    out
}

/// Render the graph as DOT for graphviz.
///
/// Triple vertices are drawn as points, branch vertices as small black
/// dots, and DB vertices as purple dots. Each consecutive pair occupies
/// one axis of its vertex — opposite compass ports — so the three pairs
/// cross like three lines through a point. Preferred half-edges get an
/// arrowhead on their side of the edge. Double circles appear in a
/// legend subgraph. Output is deterministic, byte for byte.
pub fn export_dot(doc: &Document) -> String {
    const PORTS: [[&str; 2]; 3] = [["n", "s"], ["e", "w"], ["ne", "sw"]];
    let g = doc.base();
    let mut out = String::new();
    out.push_str("graph daisy {\n");

    for (v, k) in &g.vertices {
        let style = match k {
            VertexKind::Triple => "shape=point width=0.15",
            VertexKind::Branch => {
                "shape=circle width=0.07 style=filled fillcolor=black label=\"\""
            }
            VertexKind::Db => {
                "shape=circle width=0.12 style=filled fillcolor=purple color=purple label=\"\""
            }
        };
        out.push_str(&format!("  \"{v}\" [{style} xlabel=\"{v}\"];\n"));
    }

    let port_of = |v: &VertexId, h: &HalfEdgeRef| -> Option<&'static str> {
        let pairs = g.pairs_at(v);
        let k = pairs.iter().position(|p| p.contains(h))?;
        let side = usize::from(pairs[k].lo() != h);
        Some(PORTS[k.min(2)][side])
    };

    for (e, (a, b)) in &g.edges {
        let h0 = HalfEdgeRef::new(e.clone(), Slot::Zero);
        let h1 = HalfEdgeRef::new(e.clone(), Slot::One);
        let tail = port_of(a, &h0).map(|p| format!(":{p}")).unwrap_or_default();
        let head = port_of(b, &h1).map(|p| format!(":{p}")).unwrap_or_default();
        let mut attrs = format!("label=\"{e}\"");
        if let Some(adg) = doc.arrowed() {
            let pref0 = adg.preferred_status(&h0).map(|s| s.is_preferred()).unwrap_or(false);
            let pref1 = adg.preferred_status(&h1).map(|s| s.is_preferred()).unwrap_or(false);
            match (pref0, pref1) {
                (true, true) => attrs.push_str(" dir=both arrowtail=normal arrowhead=normal"),
                (true, false) => attrs.push_str(" dir=back arrowtail=normal"),
                (false, true) => attrs.push_str(" dir=forward arrowhead=normal"),
                (false, false) => {}
            }
        }
        out.push_str(&format!("  \"{a}\"{tail} -- \"{b}\"{head} [{attrs}];\n"));
    }

    if g.circles > 0 {
        out.push_str("  subgraph cluster_circles {\n");
        out.push_str("    label=\"double circles\";\n");
        for i in 1..=g.circles {
            out.push_str(&format!("    \"circle{i}\" [shape=doublecircle label=\"\"];\n"));
        }
        out.push_str("  }\n");
    }

    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, h};

    fn star_doc() -> Document {
        Document::Adg(fixtures::star())
    }

    #[test]
    fn minimal_documents_parse() {
        let doc = parse("adg\nvertex b1 branch\nvertex b2 branch\nedge e1 b1 b2\n").unwrap();
        assert_eq!(doc.kind(), DocumentKind::Adg);
        assert_eq!(doc.base().edges.len(), 1);

        let doc = parse("dg\ncircles 3\n").unwrap();
        assert_eq!(doc.base().circles, 3);

        assert!(matches!(
            parse(""),
            Err(ParseError::Syntax { line: 1, column: 1, .. })
        ));
    }

    #[test]
    fn comments_blanks_and_declaration_order_are_free() {
        let a = parse("adg\nvertex b2 branch\n\n# tail\nedge e1 b1 b2   # slot 0 at b1\nvertex b1 branch\n").unwrap();
        let b = parse("adg\nvertex b1 branch\nvertex b2 branch\nedge e1 b1 b2\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn serialize_round_trips_the_star() {
        let text = serialize(&star_doc());
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed, star_doc());
        assert_eq!(serialize(&parsed), text, "canonical text is a fixed point");
        assert!(text.starts_with("adg\n"));
        assert!(text.contains("pair v e1.0 e2.0 pref e1.0\n"));
    }

    #[test]
    fn dg_documents_reject_pref() {
        let err = parse("dg\nvertex v triple\npair v e1.0 e2.0 pref e1.0\n").unwrap_err();
        match err {
            ParseError::Syntax { line, column, message } => {
                assert_eq!(line, 3);
                assert_eq!(column, 18);
                assert!(message.contains("forbidden in a dg"));
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        for (text, line, column) in [
            ("adg\nvortex v triple\n", 2, 1),              // unknown keyword
            ("adg\nvertex v tripel\n", 2, 10),             // unknown vertex kind
            ("adg\nvertex v\n", 2, 9),                     // missing field
            ("adg\nvertex v triple extra\n", 2, 17),       // excess token
            ("adg\npair v e1.2 e2.0\n", 2, 8),             // bad slot
            ("adg\npair v e$.0 e2.0\n", 2, 8),             // bad identifier
            ("xdg\n", 1, 1),                               // bad kind
            ("adg\ncircles 2\ncircles 3\n", 3, 1),         // duplicate circles
            ("adg\nvertex v triple\nvertex v db\n", 3, 8), // duplicate vertex
            ("adg\norder v e1.0 e2.0 e3.0\n", 2, 1),       // order outside odg
        ] {
            match parse(text) {
                Err(ParseError::Syntax { line: l, column: c, .. }) => {
                    assert_eq!((l, c), (line, column), "for {text:?}");
                }
                other => panic!("expected syntax error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn violations_point_back_at_declaration_lines() {
        // Line 6 pairs e1.0 with e3.0 while e2.0 goes unmentioned, and no
        // pref is given: the pair problems land on their pair lines, the
        // uncovered half-edge on its edge line.
        let text = "adg\n\
                    vertex v triple\n\
                    vertex b1 branch\nvertex b2 branch\nvertex b3 branch\n\
                    vertex b4 branch\nvertex b5 branch\nvertex b6 branch\n\
                    edge e1 v b1\nedge e2 v b2\nedge e3 v b3\n\
                    edge e4 v b4\nedge e5 v b5\nedge e6 v b6\n\
                    pair v e1.0 e3.0 pref e1.0\n\
                    pair v e2.0 e4.0\n\
                    pair v e5.0 e6.0 pref e5.0\n";
        let err = parse(text).unwrap_err();
        let ParseError::Invalid { violations } = err else { panic!("expected Invalid") };
        assert_eq!(violations.len(), 1);
        assert!(matches!(violations[0].violation, Violation::ArrowMissing { .. }));
        assert_eq!(violations[0].line, Some(16));

        let text = "dg\nvertex v triple\nvertex b1 branch\nedge e1 v b1\npair v e1.0 e1.0\n";
        let err = parse(text).unwrap_err();
        let ParseError::Invalid { violations } = err else { panic!("expected Invalid") };
        for v in &violations {
            match &v.violation {
                Violation::WrongDegree { .. } => assert_eq!(v.line, Some(2)),
                Violation::DuplicatedInPairing { .. } => assert_eq!(v.line, Some(5)),
                Violation::WrongPairCount { .. } => assert_eq!(v.line, Some(5)),
                other => panic!("unexpected violation {other}"),
            }
        }
    }

    #[test]
    fn odg_documents_carry_orders() {
        let mut odg = crate::model::OrderedDaisyGraph::from_base(fixtures::star());
        odg.set_order("v", [h("e3", 0), h("e5", 0), h("e1", 0)]);
        let doc = Document::Odg(odg.clone());
        let text = serialize(&doc);
        // Serialization canonicalizes the rotation: smallest half first.
        assert!(text.contains("order v e1.0 e3.0 e5.0\n"));
        let reparsed = parse(&text).unwrap();
        let Document::Odg(back) = &reparsed else { panic!("expected odg") };
        assert_eq!(back.orders_equal(&odg), Ok(true));
        assert_eq!(serialize(&reparsed), text);
    }

    #[test]
    fn odg_missing_and_broken_orders_are_located() {
        let base = serialize(&star_doc()).replace("adg\n", "odg\n");
        let err = parse(&base).unwrap_err();
        let ParseError::Invalid { violations } = err else { panic!("expected Invalid") };
        assert!(matches!(violations[0].violation, Violation::OrderingMissing { .. }));
        assert_eq!(violations[0].line, Some(8), "vertex v is declared on line 8");

        let with_bad_order = format!("{base}order v e1.0 e2.0 e5.0\n");
        let err = parse(&with_bad_order).unwrap_err();
        let ParseError::Invalid { violations } = err else { panic!("expected Invalid") };
        assert!(matches!(
            violations[0].violation,
            Violation::OrderingNotPreferred { ref half_edge, .. } if *half_edge == h("e2", 0)
        ));
        assert_eq!(violations[0].line, Some(18), "the order line itself");
    }

    #[test]
    fn dot_export_is_deterministic_and_styled() {
        let dot = export_dot(&star_doc());
        assert_eq!(dot, export_dot(&star_doc()));
        assert_eq!(dot.matches("shape=point").count(), 1, "one triple vertex");
        assert_eq!(dot.matches("fillcolor=black").count(), 6, "six branch leaves");
        assert_eq!(dot.matches(" -- ").count(), 6, "six edges");
        assert_eq!(dot.matches("dir=back").count(), 3, "three arrows, all at slot 0");
        assert!(dot.contains("\"v\":n -- \"b1\""), "pair 0 occupies the n/s axis");
        assert!(dot.contains("\"v\":s -- \"b2\""));
    }

    #[test]
    fn dot_export_marks_db_and_circles() {
        let mut g = DaisyGraph::new();
        g.circles = 2;
        g.add_vertex("b", VertexKind::Branch)
            .add_vertex("d", VertexKind::Db)
            .add_edge("e", "b", "d");
        let dot = export_dot(&Document::Dg(g));
        assert_eq!(dot.matches("fillcolor=purple").count(), 1);
        assert_eq!(dot.matches("doublecircle").count(), 2);
        assert!(dot.contains("cluster_circles"));
        assert!(!dot.contains("dir="), "plain dg edges carry no arrows");

        let empty = export_dot(&Document::Dg(DaisyGraph::new()));
        assert_eq!(empty, "graph daisy {\n}\n");
    }
}
