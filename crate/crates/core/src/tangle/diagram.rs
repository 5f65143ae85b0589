//! Sliced framed-link diagrams and their text format.
//!
//! A diagram is a list of slices read from bottom to top. Each slice is a
//! list of events, left to right:
//!
//! ```text
//! |c   |c^   |c_     identity strand of component c (optionally up / down)
//! U(c)               cup: local minimum, opens two strands of component c
//! A(c)               cap: local maximum, closes two strands of component c
//! X+(a,b)  X-(a,b)   crossing; a is the lower-left strand (leaving upper
//!                    right), b the lower-right strand (leaving upper left)
//! ```
//!
//! `#` starts a comment. Strand orientations are inferred per component:
//! markers fix them, otherwise the left strand leaving the lowest cup of the
//! component points up.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn flip(self) -> Self {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossSign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Event {
    Id { comp: usize, mark: Option<Orient> },
    Cup(usize),
    Cap(usize),
    Cross { sign: CrossSign, a: usize, b: usize },
}

impl Event {
    /// Number of strands below and above the event.
    pub fn arity(&self) -> (usize, usize) {
        match self {
            Event::Id { .. } => (1, 1),
            Event::Cup(_) => (0, 2),
            Event::Cap(_) => (2, 0),
            Event::Cross { .. } => (2, 2),
        }
    }

    fn below(&self) -> Vec<usize> {
        match *self {
            Event::Id { comp, .. } => vec![comp],
            Event::Cup(_) => vec![],
            Event::Cap(c) => vec![c, c],
            Event::Cross { a, b, .. } => vec![a, b],
        }
    }

    fn above(&self) -> Vec<usize> {
        match *self {
            Event::Id { comp, .. } => vec![comp],
            Event::Cup(c) => vec![c, c],
            Event::Cap(_) => vec![],
            Event::Cross { a, b, .. } => vec![b, a],
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Id { comp, mark: None } => write!(f, "|{}", comp),
            Event::Id {
                comp,
                mark: Some(Orient::Up),
            } => write!(f, "|{}^", comp),
            Event::Id {
                comp,
                mark: Some(Orient::Down),
            } => write!(f, "|{}_", comp),
            Event::Cup(c) => write!(f, "U({})", c),
            Event::Cap(c) => write!(f, "A({})", c),
            Event::Cross {
                sign: CrossSign::Plus,
                a,
                b,
            } => write!(f, "X+({},{})", a, b),
            Event::Cross {
                sign: CrossSign::Minus,
                a,
                b,
            } => write!(f, "X-({},{})", a, b),
        }
    }
}

/// Per-strand data of an interface between two slices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Strand {
    pub comp: usize,
    pub orient: Orient,
}

/// A validated, closed, oriented diagram.
#[derive(Clone, Debug)]
pub struct Diagram {
    components: usize,
    slices: Vec<Vec<Event>>,
    /// `interfaces[k]` lies below slice `k`; `interfaces[slices.len()]` is
    /// the (empty) top boundary.
    interfaces: Vec<Vec<Strand>>,
    fingerprint: u64,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components && self.slices == other.slices
    }
}

impl Eq for Diagram {}

struct Dsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl Dsu {
    fn new() -> Self {
        Dsu {
            parent: Vec::new(),
            parity: Vec::new(),
        }
    }

    fn add(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parity.push(false);
        self.parent.len() - 1
    }

    /// Root and parity of `x` relative to the root.
    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (r, p) = self.find(self.parent[x]);
        self.parent[x] = r;
        self.parity[x] ^= p;
        (r, self.parity[x])
    }

    /// Records that `x` and `y` have equal (`flip == false`) or opposite
    /// orientations.
    fn union(&mut self, x: usize, y: usize, flip: bool) {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx != ry {
            self.parent[rx] = ry;
            self.parity[rx] = px ^ py ^ flip;
        }
    }
}

impl Diagram {
    /// Validates slices (bottom to top) and infers orientations.
    pub fn new(slices: Vec<Vec<Event>>) -> Result<Self> {
        let mut comps = 0usize;
        for s in &slices {
            for e in s {
                for c in e.below().into_iter().chain(e.above()) {
                    comps = comps.max(c + 1);
                }
            }
        }
        // walk interfaces bottom-up, assigning a node id to every strand
        let mut dsu = Dsu::new();
        let mut iface_nodes: Vec<Vec<usize>> = vec![Vec::new()];
        let mut iface_comps: Vec<Vec<usize>> = vec![Vec::new()];
        let mut marks: Vec<(usize, Orient)> = Vec::new();
        let mut first_cup: Vec<Option<usize>> = vec![None; comps];
        for (si, slice) in slices.iter().enumerate() {
            let below_nodes = iface_nodes.last().unwrap().clone();
            let below_comps = iface_comps.last().unwrap().clone();
            let need: usize = slice.iter().map(|e| e.arity().0).sum();
            if need != below_nodes.len() {
                let msg = format!(
                    "slice {} consumes {} strands but {} arrive from below",
                    si + 1,
                    need,
                    below_nodes.len()
                );
                return Err(if si == 0 {
                    Error::OpenDiagram(format!("bottom boundary is not empty: {}", msg))
                } else {
                    Error::InterfaceMismatch {
                        slice: si + 1,
                        message: msg,
                    }
                });
            }
            let mut pos = 0;
            let mut above_nodes = Vec::new();
            let mut above_comps = Vec::new();
            for ev in slice {
                let (nb, _) = ev.arity();
                let bc = &below_comps[pos..pos + nb];
                if bc != ev.below().as_slice() {
                    return Err(Error::InterfaceMismatch {
                        slice: si + 1,
                        message: format!(
                            "event {} expects components {:?} below but finds {:?}",
                            ev,
                            ev.below(),
                            bc
                        ),
                    });
                }
                let bn = &below_nodes[pos..pos + nb];
                match *ev {
                    Event::Id { comp, mark } => {
                        let n = dsu.add();
                        dsu.union(n, bn[0], false);
                        if let Some(o) = mark {
                            marks.push((n, o));
                        }
                        above_nodes.push(n);
                        above_comps.push(comp);
                    }
                    Event::Cup(c) => {
                        let l = dsu.add();
                        let r = dsu.add();
                        dsu.union(l, r, true);
                        if first_cup[c].is_none() {
                            first_cup[c] = Some(l);
                        }
                        above_nodes.extend([l, r]);
                        above_comps.extend([c, c]);
                    }
                    Event::Cap(_) => {
                        dsu.union(bn[0], bn[1], true);
                    }
                    Event::Cross { a, b, .. } => {
                        let l = dsu.add();
                        let r = dsu.add();
                        // lower-left continues to upper-right and vice versa
                        dsu.union(r, bn[0], false);
                        dsu.union(l, bn[1], false);
                        above_nodes.extend([l, r]);
                        above_comps.extend([b, a]);
                    }
                }
                pos += nb;
            }
            iface_nodes.push(above_nodes);
            iface_comps.push(above_comps);
        }
        if !iface_nodes.last().unwrap().is_empty() {
            return Err(Error::OpenDiagram(format!(
                "{} strands remain at the top boundary",
                iface_nodes.last().unwrap().len()
            )));
        }
        // loops are the connected classes; one per component
        let mut loop_of_comp: Vec<Option<usize>> = vec![None; comps];
        for k in 0..iface_nodes.len() {
            for (p, &n) in iface_nodes[k].iter().enumerate() {
                let c = iface_comps[k][p];
                let (root, _) = dsu.find(n);
                match loop_of_comp[c] {
                    None => loop_of_comp[c] = Some(root),
                    Some(r) if r != root => {
                        return Err(Error::InvalidInput(format!(
                            "component {} consists of more than one closed loop",
                            c
                        )))
                    }
                    _ => {}
                }
            }
        }
        for (c, l) in loop_of_comp.iter().enumerate() {
            if l.is_none() {
                return Err(Error::InvalidInput(format!(
                    "component {} does not occur in the diagram",
                    c
                )));
            }
        }
        // root orientation per loop: markers first, then the default
        let mut root_orient: std::collections::HashMap<usize, Orient> = Default::default();
        for &(n, o) in &marks {
            let (root, par) = dsu.find(n);
            let ro = if par { o.flip() } else { o };
            if let Some(&prev) = root_orient.get(&root) {
                if prev != ro {
                    return Err(Error::InvalidInput(format!(
                        "conflicting orientation markers (at strand marked {:?})",
                        o
                    )));
                }
            }
            root_orient.insert(root, ro);
        }
        for fc in first_cup.iter().flatten() {
            let (root, par) = dsu.find(*fc);
            root_orient
                .entry(root)
                .or_insert(if par { Orient::Down } else { Orient::Up });
        }
        let mut interfaces = Vec::with_capacity(iface_nodes.len());
        for k in 0..iface_nodes.len() {
            let mut iface = Vec::new();
            for (p, &n) in iface_nodes[k].iter().enumerate() {
                let (root, par) = dsu.find(n);
                let ro = root_orient[&root];
                iface.push(Strand {
                    comp: iface_comps[k][p],
                    orient: if par { ro.flip() } else { ro },
                });
            }
            interfaces.push(iface);
        }
        let mut d = Diagram {
            components: comps,
            slices,
            interfaces,
            fingerprint: 0,
        };
        let mut h = DefaultHasher::new();
        d.to_text().hash(&mut h);
        d.fingerprint = h.finish();
        Ok(d)
    }

    /// The empty diagram (the empty link).
    pub fn empty() -> Self {
        Self::new(Vec::new()).unwrap()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn slices(&self) -> &[Vec<Event>] {
        &self.slices
    }

    /// Strands below slice `k` (`k == slices().len()` is the top boundary).
    pub fn interface(&self, k: usize) -> &[Strand] {
        &self.interfaces[k]
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn crossing_count(&self) -> usize {
        self.slices
            .iter()
            .flatten()
            .filter(|e| matches!(e, Event::Cross { .. }))
            .count()
    }

    /// Oriented sign of every crossing, with the components involved, in
    /// bottom-to-top order.
    pub fn crossing_signs(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for (k, slice) in self.slices.iter().enumerate() {
            let mut pos = 0;
            for ev in slice {
                if let Event::Cross { sign, a, b } = *ev {
                    let below = &self.interfaces[k];
                    let same = below[pos].orient == below[pos + 1].orient;
                    let s = match (sign, same) {
                        (CrossSign::Plus, true) | (CrossSign::Minus, false) => 1,
                        _ => -1,
                    };
                    out.push((a, b, s));
                }
                pos += ev.arity().0;
            }
        }
        out
    }

    /// Linking matrix with blackboard-framing writhes on the diagonal.
    pub fn linking_data(&self) -> Vec<Vec<i64>> {
        let m = self.components;
        let mut twice = vec![vec![0i64; m]; m];
        for (a, b, s) in self.crossing_signs() {
            if a == b {
                twice[a][a] += 2 * s;
            } else {
                twice[a][b] += s;
                twice[b][a] += s;
            }
        }
        twice
            .into_iter()
            .map(|row| row.into_iter().map(|x| x / 2).collect())
            .collect()
    }

    /// Writhe (blackboard framing) of each component.
    pub fn writhes(&self) -> Vec<i64> {
        let l = self.linking_data();
        (0..self.components).map(|i| l[i][i]).collect()
    }

    /// The sublink on the components listed in `keep` (renumbered in that
    /// order). Crossings with a deleted component become plain strands.
    pub fn sublink(&self, keep: &[usize]) -> Result<Diagram> {
        let mut map = vec![None; self.components];
        for (new, &old) in keep.iter().enumerate() {
            if old >= self.components || map[old].is_some() {
                return Err(Error::InvalidInput(format!(
                    "bad component list {:?}",
                    keep
                )));
            }
            map[old] = Some(new);
        }
        let mut slices = Vec::new();
        for slice in &self.slices {
            let mut out = Vec::new();
            for ev in slice {
                match *ev {
                    Event::Id { comp, mark } => {
                        if let Some(c) = map[comp] {
                            out.push(Event::Id { comp: c, mark });
                        }
                    }
                    Event::Cup(c) => {
                        if let Some(c) = map[c] {
                            out.push(Event::Cup(c));
                        }
                    }
                    Event::Cap(c) => {
                        if let Some(c) = map[c] {
                            out.push(Event::Cap(c));
                        }
                    }
                    Event::Cross { sign, a, b } => match (map[a], map[b]) {
                        (Some(a), Some(b)) => out.push(Event::Cross { sign, a, b }),
                        (Some(a), None) => out.push(Event::Id {
                            comp: a,
                            mark: None,
                        }),
                        (None, Some(b)) => out.push(Event::Id {
                            comp: b,
                            mark: None,
                        }),
                        (None, None) => {}
                    },
                }
            }
            if !out.is_empty() && !out.iter().all(|e| matches!(e, Event::Id { .. })) {
                slices.push(out);
            }
        }
        Diagram::new(slices)
    }

    /// Canonical text, one slice per line, bottom slice first.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for slice in &self.slices {
            let line: Vec<String> = slice.iter().map(|e| e.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Text with every identity strand carrying its inferred orientation.
    pub fn to_oriented_text(&self) -> String {
        let mut s = String::new();
        for (k, slice) in self.slices.iter().enumerate() {
            let mut pos = 0;
            let mut words = Vec::new();
            for ev in slice {
                match ev {
                    Event::Id { comp, .. } => {
                        let o = self.interfaces[k][pos].orient;
                        words.push(
                            Event::Id {
                                comp: *comp,
                                mark: Some(o),
                            }
                            .to_string(),
                        );
                    }
                    other => words.push(other.to_string()),
                }
                pos += ev.arity().0;
            }
            s.push_str(&words.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.pos + 1,
            message: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a component number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Syntax {
                line: self.line,
                column: start + 1,
                message: format!("component number {} is too large", s),
            })
            .and_then(|n: usize| {
                if n > 200 {
                    Err(Error::Syntax {
                        line: self.line,
                        column: start + 1,
                        message: format!("component number {} is too large", n),
                    })
                } else {
                    Ok(n)
                }
            })
    }

    fn event(&mut self) -> Result<Event> {
        let c = self.peek().unwrap();
        self.pos += 1;
        match c {
            '|' => {
                let comp = self.number()?;
                let mark = match self.peek() {
                    Some('^') => {
                        self.pos += 1;
                        Some(Orient::Up)
                    }
                    Some('_') => {
                        self.pos += 1;
                        Some(Orient::Down)
                    }
                    _ => None,
                };
                Ok(Event::Id { comp, mark })
            }
            'U' | 'A' => {
                self.expect('(')?;
                let n = self.number()?;
                self.expect(')')?;
                Ok(if c == 'U' {
                    Event::Cup(n)
                } else {
                    Event::Cap(n)
                })
            }
            'X' => {
                let sign = match self.peek() {
                    Some('+') => CrossSign::Plus,
                    Some('-') => CrossSign::Minus,
                    _ => return Err(self.err("expected '+' or '-' after 'X'")),
                };
                self.pos += 1;
                self.expect('(')?;
                let a = self.number()?;
                self.expect(',')?;
                let b = self.number()?;
                self.expect(')')?;
                Ok(Event::Cross { sign, a, b })
            }
            other => {
                self.pos -= 1;
                Err(self.err(format!("unexpected character '{}'", other)))
            }
        }
    }
}

/// Parses the text format (bottom slice first) and validates the result.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut slices = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor {
            chars: content.chars().collect(),
            pos: 0,
            line: ln + 1,
            _src: raw,
        };
        let mut slice = Vec::new();
        loop {
            cur.skip_ws();
            if cur.peek().is_none() {
                break;
            }
            slice.push(cur.event()?);
            if cur.peek().is_some_and(|c| !c.is_whitespace()) {
                return Err(cur.err("events must be separated by whitespace"));
            }
        }
        slices.push(slice);
    }
    Diagram::new(slices)
}
