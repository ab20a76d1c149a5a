//! Planar binary monomials in two generators, leaves labeled in order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Binary generator: `Left` is `⊣`/`≺`, `Right` is `⊢`/`≻`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Left,
    Right,
}

impl Gen {
    pub const BOTH: [Gen; 2] = [Gen::Left, Gen::Right];

    /// Position of the generator in the arity-2 basis.
    pub fn index(self) -> usize {
        match self {
            Gen::Left => 0,
            Gen::Right => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::Left => '<',
            Gen::Right => '>',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    Leaf,
    Node(Gen, Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    pub fn node(g: Gen, a: Monomial, b: Monomial) -> Monomial {
        Monomial::Node(g, Box::new(a), Box::new(b))
    }

    pub fn left(a: Monomial, b: Monomial) -> Monomial {
        Monomial::node(Gen::Left, a, b)
    }

    pub fn right(a: Monomial, b: Monomial) -> Monomial {
        Monomial::node(Gen::Right, a, b)
    }

    pub fn arity(&self) -> usize {
        match self {
            Monomial::Leaf => 1,
            Monomial::Node(_, a, b) => a.arity() + b.arity(),
        }
    }

    pub fn split(&self) -> Option<(Gen, &Monomial, &Monomial)> {
        match self {
            Monomial::Leaf => None,
            Monomial::Node(g, a, b) => Some((*g, a, b)),
        }
    }

    /// Every monomial of arity `n`: `2^{n-1} c_{n-1}` of them.
    pub fn all(n: usize) -> Vec<Monomial> {
        let mut table: Vec<Vec<Monomial>> = vec![Vec::new(), vec![Monomial::Leaf]];
        for k in 2..=n {
            let mut level = Vec::new();
            for left in 1..k {
                for g in Gen::BOTH {
                    for a in &table[left] {
                        for b in &table[k - left] {
                            level.push(Monomial::node(g, a.clone(), b.clone()));
                        }
                    }
                }
            }
            table.push(level);
        }
        if n == 0 {
            return Vec::new();
        }
        table.swap_remove(n)
    }

    /// Replaces the `i`-th leaf (1-based) by `m`.
    pub fn graft(&self, i: usize, m: &Monomial) -> Monomial {
        match self {
            Monomial::Leaf => {
                debug_assert_eq!(i, 1);
                m.clone()
            }
            Monomial::Node(g, a, b) => {
                let k = a.arity();
                if i <= k {
                    Monomial::node(*g, a.graft(i, m), (**b).clone())
                } else {
                    Monomial::node(*g, (**a).clone(), b.graft(i - k, m))
                }
            }
        }
    }

    /// Text form with leaves labeled `x{first}`, `x{first+1}`, ...
    pub fn render(&self, first: usize) -> String {
        let labels: Vec<usize> = (first..first + self.arity()).collect();
        self.render_with(&labels)
    }

    /// Text form with the `k`-th leaf labeled `x{labels[k]}`.
    pub fn render_with(&self, labels: &[usize]) -> String {
        let mut out = String::new();
        self.render_labels(labels, 0, &mut out);
        out
    }

    fn render_labels(&self, labels: &[usize], pos: usize, out: &mut String) -> usize {
        match self {
            Monomial::Leaf => {
                out.push_str(&format!("x{}", labels[pos]));
                pos + 1
            }
            Monomial::Node(g, a, b) => {
                out.push('(');
                let next = a.render_labels(labels, pos, out);
                out.push(g.symbol());
                let next = b.render_labels(labels, next, out);
                out.push(')');
                next
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(1))
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses the [`Monomial::render`] form; `≺`/`⊣` and `≻`/`⊢` are accepted
    /// as well, and the outermost parentheses may be omitted.
    fn from_str(s: &str) -> Result<Monomial> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { chars: &chars, pos: 0, next_label: 1 };
        let m = p.expr()?;
        if p.pos != chars.len() {
            return Err(p.error("trailing input"));
        }
        Ok(m)
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    next_label: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("monomial: {what} at position {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn op(&mut self) -> Option<Gen> {
        let g = match self.peek()? {
            '<' | '≺' | '⊣' => Gen::Left,
            '>' | '≻' | '⊢' => Gen::Right,
            _ => return None,
        };
        self.pos += 1;
        Some(g)
    }

    fn expr(&mut self) -> Result<Monomial> {
        let a = self.term()?;
        match self.op() {
            Some(g) => Ok(Monomial::node(g, a, self.term()?)),
            None => Ok(a),
        }
    }

    fn term(&mut self) -> Result<Monomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let m = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(m)
            }
            Some('x') => {
                self.pos += 1;
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let label: usize = self.chars[start..self.pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| self.error("expected a variable index"))?;
                if label != self.next_label {
                    return Err(self.error(&format!("expected x{}", self.next_label)));
                }
                self.next_label += 1;
                Ok(Monomial::Leaf)
            }
            _ => Err(self.error("expected 'x' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (1..=6).map(|n| Monomial::all(n).len()).collect();
        // 2^{n-1} c_{n-1}
        assert_eq!(counts, vec![1, 2, 8, 40, 224, 1344]);
    }

    #[test]
    fn render_and_parse() {
        let m: Monomial = "((x1<x2)>x3)".parse().unwrap();
        assert_eq!(m.arity(), 3);
        assert_eq!(m.to_string(), "((x1<x2)>x3)");
        let n: Monomial = "((x1⊣x2)⊢x3)⊣(x4⊢x5)".parse().unwrap();
        assert_eq!(n.to_string(), "(((x1<x2)>x3)<(x4>x5))");
        assert!("(x1<x3)".parse::<Monomial>().is_err());
        for m in Monomial::all(4) {
            assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
        }
    }

    #[test]
    fn graft_relabels() {
        let a: Monomial = "x1<x2".parse().unwrap();
        let b: Monomial = "x1>x2".parse().unwrap();
        assert_eq!(a.graft(2, &b).to_string(), "(x1<(x2>x3))");
        assert_eq!(a.graft(1, &b).to_string(), "((x1>x2)<x3)");
    }
}
