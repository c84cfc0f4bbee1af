//! The space-specification grammar
//!
//! ```text
//! spec     := series rank "/" selector [";mu=" rationals] [";scale=" rational]
//! selector := "torus" | "full" | "D" rank | "roots:" [root ("," root)*]
//! root     := "(" rationals ")"
//! ```
//!
//! `D<k>` is only accepted inside `B<k>` (`D1` is the circle, i.e. the torus). Root coordinates are ambient
//! coordinates of the parent system (for G2, coefficients on the simple
//! roots `(short, long)`).

use std::fmt;

use crate::error::{Error, Result};
use crate::homspace::{make_pair, EqualRankPair};
use crate::rootsys::{build_root_system, RootSystem, Series};
use crate::weight::{fmt_q, parse_q, qi, Weight, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EtaSelector {
    /// `D<k>` inside `B<k>`.
    D(usize),
    Torus,
    Full,
    Roots(Vec<Weight>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceSpec {
    pub series: Series,
    pub rank: usize,
    pub eta: EtaSelector,
    pub mu: Option<Vec<Q>>,
    pub scale: Option<Q>,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected a rank"));
        }
        let value = self.rest()[..digits]
            .parse()
            .map_err(|_| self.err("rank out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn rational(&mut self) -> Result<Q> {
        let len = self
            .rest()
            .bytes()
            .take_while(|b| b.is_ascii_digit() || *b == b'-' || *b == b'/')
            .count();
        let token = &self.rest()[..len];
        let value =
            parse_q(token).ok_or_else(|| self.err(format!("invalid rational `{token}`")))?;
        self.pos += len;
        Ok(value)
    }

    fn rationals(&mut self) -> Result<Vec<Q>> {
        let mut out = vec![self.rational()?];
        while self.eat(",") {
            out.push(self.rational()?);
        }
        Ok(out)
    }
}

impl SpaceSpec {
    pub fn parse(text: &str) -> Result<SpaceSpec> {
        let mut cur = Cursor { text, pos: 0 };
        let letter = cur
            .rest()
            .chars()
            .next()
            .ok_or_else(|| cur.err("empty specification"))?;
        if !letter.is_ascii_uppercase() {
            return Err(cur.err("expected a series letter"));
        }
        let series = Series::from_letter(letter)?;
        cur.pos += 1;
        let rank = cur.number()?;
        if series == Series::G2 && rank != 2 {
            return Err(Error::InvalidRank {
                series: "G".into(),
                rank,
            });
        }
        cur.expect("/")?;
        let eta = if cur.eat("torus") {
            EtaSelector::Torus
        } else if cur.eat("full") {
            EtaSelector::Full
        } else if cur.eat("roots:") {
            let mut roots = Vec::new();
            if cur.rest().starts_with('(') {
                loop {
                    cur.expect("(")?;
                    roots.push(Weight::new(cur.rationals()?));
                    cur.expect(")")?;
                    if !cur.eat(",") {
                        break;
                    }
                }
            }
            EtaSelector::Roots(roots)
        } else if cur.eat("D") {
            let at = cur.pos;
            let k = cur.number()?;
            if series != Series::B || k != rank {
                return Err(Error::Parse {
                    position: at,
                    message: format!("D{k} is only available as a subsystem of B{k}"),
                });
            }
            EtaSelector::D(k)
        } else {
            return Err(cur.err("expected `torus`, `full`, `D<k>` or `roots:`"));
        };
        let mut spec = SpaceSpec {
            series,
            rank,
            eta,
            mu: None,
            scale: None,
        };
        if cur.eat(";mu=") {
            spec.mu = Some(cur.rationals()?);
        }
        if cur.eat(";scale=") {
            spec.scale = Some(cur.rational()?);
        }
        if !cur.rest().is_empty() {
            return Err(cur.err(format!("unexpected trailing input `{}`", cur.rest())));
        }
        Ok(spec)
    }

    pub fn g(&self) -> Result<RootSystem> {
        build_root_system(self.series, self.rank)
    }

    /// Resolves the selector into an equal-rank pair.
    pub fn pair(&self) -> Result<EqualRankPair> {
        let g = self.g()?;
        let (gens, name): (Vec<Weight>, String) = match &self.eta {
            EtaSelector::D(k) => (
                g.positive_roots()
                    .iter()
                    .filter(|a| a.coords().iter().filter(|c| **c != qi(0)).count() == 2)
                    .cloned()
                    .collect(),
                format!("D{k}"),
            ),
            EtaSelector::Torus => (Vec::new(), "torus".into()),
            EtaSelector::Full => (g.simple_roots().to_vec(), g.name().to_string()),
            EtaSelector::Roots(roots) => {
                for r in roots {
                    g.require_dim(r)?;
                }
                (roots.clone(), "eta".into())
            }
        };
        Ok(make_pair(&g, &gens)?.with_eta_name(name))
    }

    /// `μ`, defaulting to zero.
    pub fn mu_weight(&self, ambient_dim: usize) -> Result<Weight> {
        match &self.mu {
            Some(c) => {
                let w = Weight::new(c.clone());
                w.check_dim(ambient_dim)?;
                Ok(w)
            }
            None => Ok(Weight::zero(ambient_dim)),
        }
    }

    pub fn scale_or_default(&self) -> Q {
        self.scale.unwrap_or(qi(1))
    }
}

fn join(values: &[Q]) -> String {
    values.iter().map(fmt_q).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.series {
            Series::G2 => write!(f, "G2/")?,
            s => write!(f, "{}{}/", s.letter(), self.rank)?,
        }
        match &self.eta {
            EtaSelector::D(k) => write!(f, "D{k}")?,
            EtaSelector::Torus => write!(f, "torus")?,
            EtaSelector::Full => write!(f, "full")?,
            EtaSelector::Roots(roots) => {
                write!(f, "roots:")?;
                let parts: Vec<String> = roots
                    .iter()
                    .map(|r| format!("({})", join(r.coords())))
                    .collect();
                write!(f, "{}", parts.join(","))?;
            }
        }
        if let Some(mu) = &self.mu {
            write!(f, ";mu={}", join(mu))?;
        }
        if let Some(s) = &self.scale {
            write!(f, ";scale={}", fmt_q(s))?;
        }
        Ok(())
    }
}
