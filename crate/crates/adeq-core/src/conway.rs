//! Conway notation: abstract syntax, parsing, rendering, family substitution
//! and source-link collapse.
//!
//! The grammar follows the conventions used by knot tabulation software:
//!
//! * whitespace separates the terms of a rational tangle (`3 1 5 4`),
//! * commas build pretzel (ramified) tangles (`2,2,-2`), with an optional
//!   trailing twist suffix (`2,2,2+`, `2,2,2++`, `2 1,3,2-`),
//! * juxtaposition of parenthesized tangles and integers builds products
//!   (`(3,2) -(3,2)`, `(2,2) 1 1 (2,-2)`),
//! * `-` before a parenthesized tangle mirrors the whole subtangle,
//! * `N*`/`N**` prefixes select a basic polyhedron; `.` and `:` fill its
//!   vertex slots in order. A `:` skips one slot (implicitly tangle `1`); a
//!   `.` immediately following a `:` is absorbed. A leading `.` or `:`
//!   implies the basic polyhedron `6*`. Unfilled trailing slots default to
//!   tangle `1`.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// Abstract syntax tree of a Conway symbol.
///
/// Sign handling is embedded per node: a negative integer mirrors the twist
/// it denotes, and `Mirror` marks a `-`-prefixed parenthesized subtangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConwayExpr {
    /// A rational (continued-fraction) twist sequence. Terms are nonzero
    /// except for the standalone zero tangle `0`.
    Rational { terms: Vec<i32> },
    /// Comma-joined tangles, plus `twists` extra crossings summed on before
    /// closure (positive count for `+` suffixes, negative for `-`).
    Pretzel { parts: Vec<ConwayExpr>, twists: i32 },
    /// Left-associated Conway product of the factors.
    Product { factors: Vec<ConwayExpr> },
    /// A basic polyhedron with one tangle per vertex slot.
    Polyhedral { poly: String, slots: Vec<ConwayExpr> },
    /// Mirror image of the inner tangle.
    Mirror { inner: Box<ConwayExpr> },
}

impl ConwayExpr {
    pub fn integer(k: i32) -> Self {
        ConwayExpr::Rational { terms: vec![k] }
    }

    /// Total crossing count of the diagram this expression builds.
    pub fn crossing_count(&self) -> usize {
        match self {
            ConwayExpr::Rational { terms } => terms.iter().map(|t| t.unsigned_abs() as usize).sum(),
            ConwayExpr::Pretzel { parts, twists } => {
                parts.iter().map(|p| p.crossing_count()).sum::<usize>()
                    + twists.unsigned_abs() as usize
            }
            ConwayExpr::Product { factors } => factors.iter().map(|f| f.crossing_count()).sum(),
            ConwayExpr::Polyhedral { slots, .. } => {
                slots.iter().map(|s| s.crossing_count()).sum()
            }
            ConwayExpr::Mirror { inner } => inner.crossing_count(),
        }
    }

    /// Pre-order list of the integer leaves (family parameters). Zero terms
    /// and basic-polyhedron ids are not leaves.
    pub fn integer_positions(&self) -> Vec<i32> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<i32>) {
        match self {
            ConwayExpr::Rational { terms } => out.extend(terms.iter().filter(|&&t| t != 0)),
            ConwayExpr::Pretzel { parts, .. } => {
                for p in parts {
                    p.collect_leaves(out);
                }
            }
            ConwayExpr::Product { factors } => {
                for f in factors {
                    f.collect_leaves(out);
                }
            }
            ConwayExpr::Polyhedral { slots, .. } => {
                for s in slots {
                    s.collect_leaves(out);
                }
            }
            ConwayExpr::Mirror { inner } => inner.collect_leaves(out),
        }
    }

    fn map_leaves<F>(&self, next: &mut usize, f: &mut F) -> Result<ConwayExpr, FamilyError>
    where
        F: FnMut(usize, i32) -> Result<i32, FamilyError>,
    {
        Ok(match self {
            ConwayExpr::Rational { terms } => {
                let mut new_terms = Vec::with_capacity(terms.len());
                for &t in terms {
                    if t == 0 {
                        new_terms.push(0);
                    } else {
                        let pos = *next;
                        *next += 1;
                        new_terms.push(f(pos, t)?);
                    }
                }
                ConwayExpr::Rational { terms: new_terms }
            }
            ConwayExpr::Pretzel { parts, twists } => ConwayExpr::Pretzel {
                parts: parts
                    .iter()
                    .map(|p| p.map_leaves(next, f))
                    .collect::<Result<_, _>>()?,
                twists: *twists,
            },
            ConwayExpr::Product { factors } => ConwayExpr::Product {
                factors: factors
                    .iter()
                    .map(|x| x.map_leaves(next, f))
                    .collect::<Result<_, _>>()?,
            },
            ConwayExpr::Polyhedral { poly, slots } => ConwayExpr::Polyhedral {
                poly: poly.clone(),
                slots: slots
                    .iter()
                    .map(|s| s.map_leaves(next, f))
                    .collect::<Result<_, _>>()?,
            },
            ConwayExpr::Mirror { inner } => ConwayExpr::Mirror {
                inner: Box::new(inner.map_leaves(next, f)?),
            },
        })
    }
}

/// A link family: a base symbol plus per-parameter increments `k_a`.
///
/// Parameter positions index the pre-order integer leaves of the base
/// expression; each addressed leaf `a` is replaced by `sgn(a)(|a| + k_a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub base: ConwayExpr,
    pub increments: BTreeMap<usize, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    /// The position does not address an integer leaf.
    NoSuchPosition(usize),
    /// Substitution into the elementary tangle `1` is not defined.
    UnitParameter(usize),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::NoSuchPosition(p) => write!(f, "no integer parameter at position {p}"),
            FamilyError::UnitParameter(p) => {
                write!(f, "parameter at position {p} is 1 and cannot grow")
            }
        }
    }
}

/// Replace each addressed integer `a` by `sgn(a)(|a| + k_a)`.
pub fn substitute_family(spec: &FamilySpec) -> Result<ConwayExpr, FamilyError> {
    let leaves = spec.base.integer_positions();
    for (&pos, _) in &spec.increments {
        match leaves.get(pos) {
            None => return Err(FamilyError::NoSuchPosition(pos)),
            Some(&1) | Some(&-1) => return Err(FamilyError::UnitParameter(pos)),
            Some(_) => {}
        }
    }
    let mut next = 0usize;
    spec.base.map_leaves(&mut next, &mut |pos, a| {
        Ok(match spec.increments.get(&pos) {
            Some(&k) => a.signum() * (a.abs() + k as i32),
            None => a,
        })
    })
}

/// Collapse every positive rational tangle to `2` and every negative one to
/// `-2`, preserving pretzel/product/polyhedral structure and elementary
/// tangles `1`, `-1`, `0`. Mixed-sign rational tangles are left unchanged.
pub fn to_source_link(e: &ConwayExpr) -> ConwayExpr {
    match e {
        ConwayExpr::Rational { terms } => {
            if terms.iter().all(|&t| t > 0) && terms != &[1] {
                ConwayExpr::integer(2)
            } else if terms.iter().all(|&t| t < 0) && terms != &[-1] {
                ConwayExpr::integer(-2)
            } else {
                e.clone()
            }
        }
        ConwayExpr::Pretzel { parts, twists } => ConwayExpr::Pretzel {
            parts: parts.iter().map(to_source_link).collect(),
            twists: *twists,
        },
        ConwayExpr::Product { factors } => ConwayExpr::Product {
            factors: factors.iter().map(to_source_link).collect(),
        },
        ConwayExpr::Polyhedral { poly, slots } => ConwayExpr::Polyhedral {
            poly: poly.clone(),
            slots: slots.iter().map(to_source_link).collect(),
        },
        ConwayExpr::Mirror { inner } => ConwayExpr::Mirror {
            inner: Box::new(to_source_link(inner)),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

fn err<T>(pos: usize, msg: &str) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.to_owned(),
    })
}

/// Slot counts of the shipped basic polyhedra, including tabulation-style
/// aliases (`101*` for `10*`, etc.).
pub fn builtin_slot_count(id: &str) -> Option<usize> {
    crate::polyhedra::slot_count(id)
}

/// Parse a Conway symbol against the built-in basic-polyhedron registry.
pub fn parse_conway(text: &str) -> Result<ConwayExpr, ParseError> {
    parse_conway_with(text, &builtin_slot_count)
}

/// Parse with a custom polyhedron-id lookup (id -> slot count).
pub fn parse_conway_with(
    text: &str,
    slot_count: &dyn Fn(&str) -> Option<usize>,
) -> Result<ConwayExpr, ParseError> {
    let s = text.trim();
    if s.is_empty() {
        return err(0, "empty symbol");
    }
    let bytes = s.as_bytes();

    // A polyhedral symbol either starts with an `N*..*` prefix or contains a
    // top-level `.`/`:`.
    if let Some((id, rest, rest_off)) = split_poly_prefix(s) {
        let n = match slot_count(id) {
            Some(n) => n,
            None => return err(0, &format!("unknown basic polyhedron `{id}`")),
        };
        let slots = parse_slots(rest, rest_off, n, slot_count)?;
        return Ok(ConwayExpr::Polyhedral {
            poly: id.to_owned(),
            slots,
        });
    }
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                if depth == 0 {
                    return err(i, "unbalanced ')'");
                }
                depth -= 1;
            }
            b'.' | b':' if depth == 0 => {
                // implied 6*
                let n = slot_count("6*").expect("6* is always registered");
                let slots = parse_slots(s, 0, n, slot_count)?;
                return Ok(ConwayExpr::Polyhedral {
                    poly: "6*".to_owned(),
                    slots,
                });
            }
            _ => {}
        }
    }
    parse_tangle(s, 0, slot_count)
}

/// Split a leading `<digits><stars>` polyhedron id, e.g. `10**` or `103*`.
fn split_poly_prefix(s: &str) -> Option<(&str, &str, usize)> {
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == 0 || i >= bytes.len() || bytes[i] != b'*' {
        return None;
    }
    let mut j = i;
    while j < bytes.len() && bytes[j] == b'*' {
        j += 1;
    }
    Some((&s[..j], &s[j..], j))
}

/// Split a polyhedron slot string on top-level `.`/`:` and assemble the slot
/// list. `:` skips one slot; empty items after a `:` are absorbed.
fn parse_slots(
    s: &str,
    off: usize,
    n: usize,
    slot_count: &dyn Fn(&str) -> Option<usize>,
) -> Result<Vec<ConwayExpr>, ParseError> {
    let one = ConwayExpr::integer(1);
    let mut slots: Vec<ConwayExpr> = Vec::new();
    let mut after_colon = false;
    let mut first = true;

    let push_item = |item: &str,
                         item_off: usize,
                         slots: &mut Vec<ConwayExpr>,
                         after_colon: bool,
                         first: bool|
     -> Result<(), ParseError> {
        let trimmed = item.trim();
        if trimmed.is_empty() {
            if first && !after_colon {
                slots.push(one.clone());
            }
            // otherwise: `.` directly after `:` (or `..`-style run) is absorbed
            else if !after_colon && !first {
                slots.push(one.clone());
            }
        } else {
            slots.push(parse_tangle(trimmed, item_off, slot_count)?);
        }
        Ok(())
    };

    let bytes = s.as_bytes();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                if depth == 0 {
                    return err(off + i, "unbalanced ')'");
                }
                depth -= 1;
            }
            b'.' | b':' if depth == 0 => {
                push_item(&s[start..i], off + start, &mut slots, after_colon, first)?;
                first = false;
                if b == b':' {
                    slots.push(one.clone());
                    after_colon = true;
                } else {
                    after_colon = false;
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return err(off + s.len(), "unbalanced '('");
    }
    push_item(&s[start..], off + start, &mut slots, after_colon, first)?;

    if slots.len() > n {
        return err(
            off,
            &format!("{} slots given, basic polyhedron has {n}", slots.len()),
        );
    }
    while slots.len() < n {
        slots.push(one.clone());
    }
    Ok(slots)
}

/// Parse a tangle expression (no top-level dots): pretzel level, then
/// products, then rational runs.
fn parse_tangle(
    s: &str,
    off: usize,
    slot_count: &dyn Fn(&str) -> Option<usize>,
) -> Result<ConwayExpr, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return err(off, "empty tangle");
    }
    let (base, twists) = strip_twist_suffix(s);

    // split on top-level commas
    let mut parts: Vec<&str> = Vec::new();
    let mut part_offs: Vec<usize> = Vec::new();
    let bytes = base.as_bytes();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                if depth == 0 {
                    return err(off + i, "unbalanced ')'");
                }
                depth -= 1;
            }
            b',' if depth == 0 => {
                parts.push(&base[start..i]);
                part_offs.push(off + start);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return err(off + base.len(), "unbalanced '('");
    }
    parts.push(&base[start..]);
    part_offs.push(off + start);

    if parts.len() > 1 || twists != 0 {
        if parts.len() < 2 {
            return err(off, "twist suffix requires a pretzel (comma) tangle");
        }
        let parsed = parts
            .iter()
            .zip(&part_offs)
            .map(|(p, &po)| parse_product(p, po, slot_count))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(ConwayExpr::Pretzel {
            parts: parsed,
            twists,
        });
    }
    parse_product(parts[0], part_offs[0], slot_count)
}

/// Trailing twist suffix: a run of `+`/`-` immediately after a digit, with an
/// optional final repeat count (`+`, `++`, `-`, `+1`).
fn strip_twist_suffix(s: &str) -> (&str, i32) {
    let bytes = s.as_bytes();
    let mut i = bytes.len();
    while i > 0 && bytes[i - 1].is_ascii_digit() {
        i -= 1;
    }
    let digits_end = bytes.len();
    let digits_start = i;
    let mut j = i;
    while j > 0 && (bytes[j - 1] == b'+' || bytes[j - 1] == b'-') {
        j -= 1;
    }
    if j == i || j == 0 || !bytes[j - 1].is_ascii_digit() {
        return (s, 0);
    }
    // signs at s[j..i], optional count digits at s[i..]
    let signs = &bytes[j..i];
    let mut total: i32 = 0;
    for (k, &b) in signs.iter().enumerate() {
        let unit = if b == b'+' { 1 } else { -1 };
        let is_last = k == signs.len() - 1;
        if is_last && digits_start < digits_end {
            let count: i32 = s[digits_start..digits_end].parse().unwrap_or(1);
            total += unit * count;
        } else {
            total += unit;
        }
    }
    (&s[..j], total)
}

/// Parse a juxtaposition of factors. Integer runs adjacent to parenthesized
/// factors are flattened into individual product terms; a pure integer run is
/// a single rational tangle (split at zero terms).
fn parse_product(
    s: &str,
    off: usize,
    slot_count: &dyn Fn(&str) -> Option<usize>,
) -> Result<ConwayExpr, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return err(off, "empty tangle");
    }
    let bytes = s.as_bytes();
    let mut factors: Vec<ConwayExpr> = Vec::new();
    let mut ints: Vec<(i32, usize)> = Vec::new(); // value, position
    let mut saw_paren = false;
    let mut i = 0usize;
    while i < bytes.len() {
        let b = bytes[i];
        if b == b' ' {
            i += 1;
            continue;
        }
        if b == b'(' || (b == b'-' && i + 1 < bytes.len() && bytes[i + 1] == b'(') {
            let mirrored = b == b'-';
            let open = if mirrored { i + 1 } else { i };
            let close = match matching_paren(bytes, open) {
                Some(c) => c,
                None => return err(off + open, "unbalanced '('"),
            };
            let inner = parse_tangle(&s[open + 1..close], off + open + 1, slot_count)?;
            // flush pending integers as individual factors
            for (v, _) in ints.drain(..) {
                factors.push(ConwayExpr::integer(v));
            }
            factors.push(if mirrored {
                ConwayExpr::Mirror {
                    inner: Box::new(inner),
                }
            } else {
                inner
            });
            saw_paren = true;
            i = close + 1;
        } else if b.is_ascii_digit() || b == b'-' {
            let start = i;
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let tok = &s[start..i];
            match tok.parse::<i32>() {
                Ok(v) => ints.push((v, off + start)),
                Err(_) => return err(off + start, &format!("bad integer `{tok}`")),
            }
        } else {
            return err(off + i, &format!("unexpected character `{}`", b as char));
        }
    }

    if !saw_paren {
        // pure rational run; zeros split the run into product factors
        let terms: Vec<i32> = ints.iter().map(|&(v, _)| v).collect();
        return Ok(rational_from_run(&terms));
    }
    for (v, _) in ints.drain(..) {
        factors.push(ConwayExpr::integer(v));
    }
    if factors.len() == 1 {
        return Ok(factors.pop().unwrap());
    }
    Ok(ConwayExpr::Product { factors })
}

/// Build a rational expression from a twist run, splitting at zeros so that
/// zero terms only ever appear as the standalone tangle `0`.
fn rational_from_run(terms: &[i32]) -> ConwayExpr {
    if terms == [0] || !terms.contains(&0) {
        return ConwayExpr::Rational {
            terms: terms.to_vec(),
        };
    }
    let mut factors: Vec<ConwayExpr> = Vec::new();
    let mut run: Vec<i32> = Vec::new();
    for &t in terms {
        if t == 0 {
            if !run.is_empty() {
                factors.push(ConwayExpr::Rational {
                    terms: core::mem::take(&mut run),
                });
            }
            factors.push(ConwayExpr::integer(0));
        } else {
            run.push(t);
        }
    }
    if !run.is_empty() {
        factors.push(ConwayExpr::Rational { terms: run });
    }
    if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        ConwayExpr::Product { factors }
    }
}

fn matching_paren(bytes: &[u8], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate().skip(open) {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Canonical textual form; `parse(render(e)) == e` for every parsed `e`.
pub fn render_conway(e: &ConwayExpr) -> String {
    let mut out = String::new();
    render_into(e, &mut out, false);
    out
}

fn render_into(e: &ConwayExpr, out: &mut String, in_product: bool) {
    match e {
        ConwayExpr::Rational { terms } => {
            for (i, t) in terms.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{t}"));
            }
        }
        ConwayExpr::Pretzel { parts, twists } => {
            let needs_paren = in_product;
            if needs_paren {
                out.push('(');
            }
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                match p {
                    ConwayExpr::Pretzel { .. } => {
                        out.push('(');
                        render_into(p, out, false);
                        out.push(')');
                    }
                    _ => render_into(p, out, false),
                }
            }
            let c = if *twists >= 0 { '+' } else { '-' };
            for _ in 0..twists.unsigned_abs() {
                out.push(c);
            }
            if needs_paren {
                out.push(')');
            }
        }
        ConwayExpr::Product { factors } => {
            for (i, f) in factors.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                match f {
                    ConwayExpr::Rational { .. } => render_into(f, out, true),
                    ConwayExpr::Mirror { .. } => render_into(f, out, true),
                    _ => {
                        out.push('(');
                        render_into(f, out, false);
                        out.push(')');
                    }
                }
            }
        }
        ConwayExpr::Polyhedral { poly, slots } => {
            out.push_str(poly);
            let one = ConwayExpr::integer(1);
            let last = slots.iter().rposition(|s| *s != one).map_or(0, |i| i + 1);
            for (i, s) in slots[..last].iter().enumerate() {
                if i > 0 {
                    out.push('.');
                }
                render_into(s, out, false);
            }
        }
        ConwayExpr::Mirror { inner } => {
            out.push_str("-(");
            render_into(inner, out, false);
            out.push(')');
        }
    }
}

impl fmt::Display for ConwayExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_conway(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ConwayExpr {
        parse_conway(s).unwrap_or_else(|e| panic!("parse `{s}`: {e}"))
    }

    #[test]
    fn rational_and_pretzel() {
        assert_eq!(p("1"), ConwayExpr::integer(1));
        assert_eq!(
            p("3 1 5 4"),
            ConwayExpr::Rational {
                terms: vec![3, 1, 5, 4]
            }
        );
        assert_eq!(
            p("2,2,-2,-2"),
            ConwayExpr::Pretzel {
                parts: vec![
                    ConwayExpr::integer(2),
                    ConwayExpr::integer(2),
                    ConwayExpr::integer(-2),
                    ConwayExpr::integer(-2)
                ],
                twists: 0
            }
        );
    }

    #[test]
    fn twist_suffixes() {
        assert_eq!(
            p("2,2,2+"),
            ConwayExpr::Pretzel {
                parts: vec![ConwayExpr::integer(2); 3],
                twists: 1
            }
        );
        assert_eq!(
            p("2,2,2++"),
            ConwayExpr::Pretzel {
                parts: vec![ConwayExpr::integer(2); 3],
                twists: 2
            }
        );
        // `+1` is an explicit repeat count for the final sign
        assert_eq!(
            p("2 2,2,2+1"),
            ConwayExpr::Pretzel {
                parts: vec![
                    ConwayExpr::Rational { terms: vec![2, 2] },
                    ConwayExpr::integer(2),
                    ConwayExpr::integer(2)
                ],
                twists: 1
            }
        );
        assert_eq!(
            p("2 1,3,2-"),
            ConwayExpr::Pretzel {
                parts: vec![
                    ConwayExpr::Rational { terms: vec![2, 1] },
                    ConwayExpr::integer(3),
                    ConwayExpr::integer(2)
                ],
                twists: -1
            }
        );
        // not a suffix: `-2` after a comma is a negative entry
        assert_eq!(
            p("3,2 1,-2"),
            ConwayExpr::Pretzel {
                parts: vec![
                    ConwayExpr::integer(3),
                    ConwayExpr::Rational { terms: vec![2, 1] },
                    ConwayExpr::integer(-2)
                ],
                twists: 0
            }
        );
    }

    #[test]
    fn zeros_split_runs() {
        assert_eq!(
            p("2 0"),
            ConwayExpr::Product {
                factors: vec![ConwayExpr::integer(2), ConwayExpr::integer(0)]
            }
        );
        assert_eq!(
            p("2 1 1 0"),
            ConwayExpr::Product {
                factors: vec![
                    ConwayExpr::Rational {
                        terms: vec![2, 1, 1]
                    },
                    ConwayExpr::integer(0)
                ]
            }
        );
        assert_eq!(p("0"), ConwayExpr::integer(0));
    }

    #[test]
    fn products_flatten_integer_runs() {
        assert_eq!(
            p("(2,2) 1 1 (2,-2)"),
            ConwayExpr::Product {
                factors: vec![
                    ConwayExpr::Pretzel {
                        parts: vec![ConwayExpr::integer(2); 2],
                        twists: 0
                    },
                    ConwayExpr::integer(1),
                    ConwayExpr::integer(1),
                    ConwayExpr::Pretzel {
                        parts: vec![ConwayExpr::integer(2), ConwayExpr::integer(-2)],
                        twists: 0
                    },
                ]
            }
        );
        let m = p("(3,2) -(3,2)");
        match &m {
            ConwayExpr::Product { factors } => {
                assert_eq!(factors.len(), 2);
                assert!(matches!(factors[1], ConwayExpr::Mirror { .. }));
            }
            _ => panic!("expected product, got {m:?}"),
        }
    }

    #[test]
    fn polyhedral_slots() {
        let e = p("6*2.-2 0.-2.2 0");
        match &e {
            ConwayExpr::Polyhedral { poly, slots } => {
                assert_eq!(poly, "6*");
                assert_eq!(slots.len(), 6);
                assert_eq!(slots[0], ConwayExpr::integer(2));
                assert_eq!(slots[2], ConwayExpr::integer(-2));
                assert_eq!(slots[4], ConwayExpr::integer(1));
                assert_eq!(slots[5], ConwayExpr::integer(1));
            }
            _ => panic!("expected polyhedral"),
        }
        assert_eq!(e.crossing_count(), 10);

        // `:` skips one slot
        let perko = p("6*3:-2 0:-2 0");
        match &perko {
            ConwayExpr::Polyhedral { slots, .. } => {
                assert_eq!(slots[0], ConwayExpr::integer(3));
                assert_eq!(slots[1], ConwayExpr::integer(1));
                assert_eq!(slots[3], ConwayExpr::integer(1));
                assert_eq!(slots[5], ConwayExpr::integer(1));
            }
            _ => panic!(),
        }
        assert_eq!(perko.crossing_count(), 10);

        // leading dot implies 6*, slot 1 = tangle 1
        let e = p(".2");
        assert_eq!(e.crossing_count(), 7);
        match &e {
            ConwayExpr::Polyhedral { poly, slots } => {
                assert_eq!(poly, "6*");
                assert_eq!(slots[0], ConwayExpr::integer(1));
                assert_eq!(slots[1], ConwayExpr::integer(2));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn colon_dot_absorption() {
        // `:` then `.` inserts exactly one implicit slot
        assert_eq!(p(".2.-2 0.-1:.-1").crossing_count(), 8);
        assert_eq!(p("10**.-1.-1.-1:.-2.2.-2").crossing_count(), 13);
        assert_eq!(p("11**.-2::-2 0:-1.-1.-1").crossing_count(), 13);
        assert_eq!(p("10**-1.-2 0.2 0::.2 0.2 0.-2 0").crossing_count(), 15);
        assert_eq!(p("11*2 0.-1.-2.-1.3 0.-1.2 0::-1").crossing_count(), 16);
        assert_eq!(p("101*-2 0::.-2 0").crossing_count(), 12);
        assert_eq!(p("102*-2 0::-2").crossing_count(), 12);
        assert_eq!(p("103*-1.-1.-1.-1::.-1").crossing_count(), 10);
        assert_eq!(p("103*-1.-1::-1.-1").crossing_count(), 10);
        assert_eq!(p("9*.-2:.-2").crossing_count(), 11);
        assert_eq!(p("9*.-2:-2 0.-2").crossing_count(), 12);
        assert_eq!(p("8*2:.-2 0:.-2 -1 0").crossing_count(), 12);
        assert_eq!(p("2 0.-2 1.-2 0.2").crossing_count(), 11);
    }

    #[test]
    fn nested_pretzels() {
        let e = p("((1,(1,3),1,1,1,1),1,1,1,1)");
        assert_eq!(e.crossing_count(), 13);
        let e = p("((1,1,(3,1),1,1,1),1,1,1,1)");
        assert_eq!(e.crossing_count(), 13);
        let e = p("6*(2,-2),-2");
        assert_eq!(e.crossing_count(), 11);
    }

    #[test]
    fn family_substitution() {
        let base = p("3 1 5 4");
        let spec = FamilySpec {
            base: base.clone(),
            increments: [(0usize, 2u32)].into_iter().collect(),
        };
        assert_eq!(substitute_family(&spec).unwrap(), p("5 1 5 4"));

        // all-zero increments are the identity
        let spec = FamilySpec {
            base: base.clone(),
            increments: [(0usize, 0u32), (2, 0), (3, 0)].into_iter().collect(),
        };
        assert_eq!(substitute_family(&spec).unwrap(), base);

        // addressing the integer 1 is an error
        let spec = FamilySpec {
            base,
            increments: [(1usize, 2u32)].into_iter().collect(),
        };
        assert_eq!(substitute_family(&spec), Err(FamilyError::UnitParameter(1)));

        // Perko family
        let spec = FamilySpec {
            base: p("6*3:-2 0:-2 0"),
            increments: [(0usize, 2u32)].into_iter().collect(),
        };
        assert_eq!(substitute_family(&spec).unwrap(), p("6*5:-2 0:-2 0"));
    }

    #[test]
    fn source_link_collapse() {
        assert_eq!(to_source_link(&p("2,2,-2,-2")), p("2,2,-2,-2"));
        assert_eq!(to_source_link(&p("3,2 1,-2")), p("2,2,-2"));
        assert_eq!(to_source_link(&p("3 1 5 4")), p("2"));
        assert_eq!(to_source_link(&p("6*3:-2 0:-2 0")), p("6*2:-2 0:-2 0"));
        // idempotent
        let e = to_source_link(&p("(3,2 1) -(4,2)"));
        assert_eq!(to_source_link(&e), e);
        assert_eq!(e, p("(2,2) -(2,2)"));
    }

    #[test]
    fn render_round_trip() {
        for s in [
            "1",
            "0",
            "3 1 5 4",
            "2,2,-2,-2",
            "2 0",
            "2 1 1 0",
            "2,2,2+",
            "2,2,2++",
            "2 1,3,2-",
            "(3,2) -(3,2)",
            "(2,2) 1 1 (2,-2)",
            "((1,(1,3),1,1,1,1),1,1,1,1)",
            "6*2.-2 0.-2.2 0",
            "6*3:-2 0:-2 0",
            ".2",
            ".2.-2 0.-1:.-1",
            "10**.-1.-1.-1:.-2.2.-2",
            "11**.-2::-2 0:-1.-1.-1",
            "103*-1.-1::-1.-1",
            "8*2:.-2 0:.-2 -1 0",
            "6*(2,-2),-2",
            ".-(2,2):2 0",
            "2:(-2,2 1) 0:-2 0",
            "9*.-2:.-2",
        ] {
            let e = p(s);
            let r = render_conway(&e);
            let e2 = parse_conway(&r).unwrap_or_else(|err| panic!("re-parse `{r}`: {err}"));
            assert_eq!(e, e2, "round trip failed for `{s}` -> `{r}`");
        }
    }

    #[test]
    fn parse_errors() {
        assert!(parse_conway("").is_err());
        assert!(parse_conway("2,,2").is_err());
        assert!(parse_conway("(2,2").is_err());
        assert!(parse_conway("99*2").is_err());
        assert!(parse_conway("6*2.2.2.2.2.2.2").is_err());
        assert!(parse_conway("2 x 2").is_err());
    }
}
