//! The textual grammar: blocks joined by `|` with labels joined by `,`,
//! composite factors joined by `*`, tree edges `i>j` joined by `,`, points as
//! comma-separated exact rationals `p/q`. Whitespace is ignored everywhere.
//!
//! Canonical (composite) labels are printed without their trivial factors
//! (single singleton blocks); a parser given the ground size restores them
//! from the missing labels. When every factor is trivial the full `*`-joined
//! spelling is printed so the label stays nonempty.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{CompositeSetPartition, LabelSet, OrderedSetPartition};
use crate::error::{Error, Result};

impl std::fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, label) in block.labels().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{label}")?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for CompositeSetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nontrivial: Vec<_> = self.nontrivial_factors().collect();
        let shown: Vec<&OrderedSetPartition> = if nontrivial.is_empty() {
            self.factors().iter().collect()
        } else {
            nontrivial
        };
        for (i, factor) in shown.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn parse_label(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_digit() {
                value = value * 10 + u64::from(b - b'0');
                if value > 1_000_000 {
                    return Err(Error::parse(start, "label too large"));
                }
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("expected a label (positive integer)"));
        }
        if value == 0 {
            return Err(Error::parse(start, "labels start at 1"));
        }
        if value > u64::from(LabelSet::MAX_LABEL) {
            return Err(Error::parse(
                start,
                format!("label {value} exceeds the supported maximum {}", LabelSet::MAX_LABEL),
            ));
        }
        Ok(value as u32)
    }

    fn parse_digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        BigInt::parse_bytes(&self.bytes[start..self.pos], 10)
            .ok_or_else(|| Error::parse(start, "invalid integer"))
    }

    fn parse_rational(&mut self) -> Result<BigRational> {
        let negative = self.eat(b'-');
        let numerator = self.parse_digits()?;
        let denominator = if self.eat(b'/') {
            let pos = self.pos;
            let d = self.parse_digits()?;
            if d.is_zero() {
                return Err(Error::parse(pos, "zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let value = BigRational::new(numerator, denominator);
        Ok(if negative { -value } else { value })
    }

    fn finish(&mut self) -> Result<()> {
        if let Some(b) = self.peek() {
            return Err(self.err(format!("unexpected character '{}'", b as char)));
        }
        Ok(())
    }
}

/// One block: labels joined by `,`.
fn scan_block(scanner: &mut Scanner) -> Result<LabelSet> {
    let mut labels = vec![scanner.parse_label()?];
    while scanner.eat(b',') {
        labels.push(scanner.parse_label()?);
    }
    let pos = scanner.pos;
    LabelSet::from_labels(labels).map_err(|e| Error::parse(pos, e.to_string()))
}

/// Blocks joined by `|`; support may be any label set.
fn scan_osp(scanner: &mut Scanner) -> Result<OrderedSetPartition> {
    let mut blocks = vec![scan_block(scanner)?];
    while scanner.eat(b'|') {
        blocks.push(scan_block(scanner)?);
    }
    let pos = scanner.pos;
    OrderedSetPartition::new(blocks).map_err(|e| Error::parse(pos, e.to_string()))
}

/// Parses an ordered set partition. The support may be any label set;
/// operations that need a full ground set `{1, …, n}` check it themselves.
pub fn parse_osp(text: &str) -> Result<OrderedSetPartition> {
    let mut scanner = Scanner::new(text);
    let osp = scan_osp(&mut scanner)?;
    scanner.finish()?;
    Ok(osp)
}

/// Parses a composite label, restoring suppressed trivial factors: the ground
/// set is `{1, …, n}` with `n` the given ground size (or the maximum label
/// seen, if `None`), and every absent label becomes its own trivial factor.
pub fn parse_csp(text: &str, ground_size: Option<u32>) -> Result<CompositeSetPartition> {
    let mut scanner = Scanner::new(text);
    let mut factors = vec![scan_osp(&mut scanner)?];
    while scanner.eat(b'*') {
        factors.push(scan_osp(&mut scanner)?);
    }
    scanner.finish()?;
    let mut covered = LabelSet::empty();
    for f in &factors {
        if !covered.is_disjoint(f.support()) {
            return Err(Error::domain("factor supports overlap"));
        }
        covered = covered.union(f.support());
    }
    let max = covered.max_label().expect("factors are nonempty");
    let n = match ground_size {
        Some(n) => {
            if max > n {
                return Err(Error::domain(format!(
                    "label {max} exceeds the ground size {n}"
                )));
            }
            n
        }
        None => max,
    };
    for label in LabelSet::full(n).difference(covered).labels() {
        factors.push(OrderedSetPartition::single_block(LabelSet::singleton(label))?);
    }
    CompositeSetPartition::new(factors)
}

/// Parses a directed edge list `i>j,k>l,…`.
pub fn parse_edges(text: &str) -> Result<Vec<(u32, u32)>> {
    let mut scanner = Scanner::new(text);
    let mut edges = Vec::new();
    loop {
        let tail = scanner.parse_label()?;
        if !scanner.eat(b'>') {
            return Err(scanner.err("expected '>' in edge"));
        }
        let head = scanner.parse_label()?;
        edges.push((tail, head));
        if !scanner.eat(b',') {
            break;
        }
    }
    scanner.finish()?;
    Ok(edges)
}

/// Parses a comma-separated list of exact rationals.
pub fn parse_point(text: &str) -> Result<Vec<BigRational>> {
    let mut scanner = Scanner::new(text);
    let mut coords = vec![scanner.parse_rational()?];
    while scanner.eat(b',') {
        coords.push(scanner.parse_rational()?);
    }
    scanner.finish()?;
    Ok(coords)
}

/// Parses a single exact rational `p/q` (`/q` optional).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let mut scanner = Scanner::new(text);
    let value = scanner.parse_rational()?;
    scanner.finish()?;
    Ok(value)
}

/// Prints `p/q`, omitting the denominator when it is 1.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn format_point(coords: &[BigRational]) -> String {
    coords.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

/// Signed coefficient prefix for a term in a printed sum: `+ `, `- `,
/// `+ 3/2 ` and so on.
pub fn format_signed_coefficient(value: &BigRational) -> String {
    let magnitude = value.abs();
    let sign = if value.is_negative() { '-' } else { '+' };
    if magnitude.is_one() {
        format!("{sign} ")
    } else {
        format!("{sign} {} ", format_rational(&magnitude))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn osp_round_trip() {
        let text = "4,11|10|3|5,7|6,8|1,9|2";
        let p = parse_osp(text).unwrap();
        assert_eq!(p.to_string(), text);
        let q = parse_osp("1, 9 | 2").unwrap();
        assert_eq!(q.to_string(), "1,9|2");
        assert!(parse_osp("2|3").unwrap().support().min_label() == Some(2));
    }

    #[test]
    fn csp_round_trip_with_trivial_factors() {
        let c = parse_csp("2,3", Some(3)).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.to_string(), "2,3");
        let explicit = parse_csp("1*2,3", None).unwrap();
        assert_eq!(explicit, c);
        let all_trivial = parse_csp("1*2*3", None).unwrap();
        assert_eq!(all_trivial.to_string(), "1*2*3");
        assert_eq!(
            parse_csp("1,9|2*3|5,7|6,8*4,11|10", None).unwrap().to_string(),
            "1,9|2*3|5,7|6,8*4,11|10"
        );
    }

    #[test]
    fn csp_ground_size_checks() {
        assert!(parse_csp("2,3", Some(2)).is_err());
        assert_eq!(parse_csp("2,3", None).unwrap().len(), 2);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_osp("1,|2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_osp("1|0") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_osp("1|2|").is_err());
        assert!(parse_osp("1|1").is_err());
    }

    #[test]
    fn edges_and_points() {
        assert_eq!(parse_edges("1>3,2>3,1>4").unwrap(), vec![(1, 3), (2, 3), (1, 4)]);
        assert!(parse_edges("1>").is_err());
        assert!(parse_edges("1-2").is_err());
        let point = parse_point("3, -1/2, 1/6").unwrap();
        assert_eq!(format_point(&point), "3,-1/2,1/6");
        assert!(parse_point("1/0").is_err());
        assert!(parse_point("").is_err());
    }

    #[test]
    fn rational_formatting() {
        let q = parse_rational("-6/4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&parse_rational("5").unwrap()), "5");
    }
}
