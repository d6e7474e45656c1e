use std::fmt;
use std::str::FromStr;

use clap::Args;
use hoggatt::exactring::{Bindings, SparsePoly, Var};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Inclusive range written `a..b`, `a..=b` or a single value `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: u32,
    pub hi: u32,
}

impl Span {
    pub fn single(v: u32) -> Self {
        Span { lo: v, hi: v }
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("`{t}` is not a nonnegative integer"));
        let span = match s.split_once("..") {
            Some((a, b)) => Span { lo: num(a)?, hi: num(b.strip_prefix('=').unwrap_or(b))? },
            None => Span::single(num(s)?),
        };
        if span.lo > span.hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// A variable left symbolic or fixed to an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    Symbolic,
    Int(BigInt),
}

impl FromStr for Binding {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("symbolic") {
            return Ok(Binding::Symbolic);
        }
        s.trim()
            .parse::<BigInt>()
            .map(Binding::Int)
            .map_err(|_| format!("`{s}` is neither an integer nor `symbolic`"))
    }
}

#[derive(Args, Clone, Debug, Default)]
pub struct BindingArgs {
    /// Value of s: an integer or `symbolic`
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<Binding>,
    /// Value of t: an integer or `symbolic`
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<Binding>,
    /// Value of q: an integer or `symbolic`
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<Binding>,
    /// Keep every variable symbolic; conflicts with integer bindings
    #[arg(long)]
    pub symbolic: bool,
}

impl BindingArgs {
    pub fn resolve(&self) -> Result<Bindings, String> {
        let mut out = Bindings::new();
        for (var, b) in [(Var::S, &self.s), (Var::T, &self.t), (Var::Q, &self.q)] {
            if let Some(Binding::Int(v)) = b {
                if self.symbolic {
                    return Err(format!("--symbolic conflicts with --{var} {v}"));
                }
                out.set(var, Some(SparsePoly::from(v.clone())));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let show = |b: &Option<Binding>| match b {
            Some(Binding::Int(v)) if !self.symbolic => json!(v.to_string()),
            _ => json!("symbolic"),
        };
        json!({ "s": show(&self.s), "t": show(&self.t), "q": show(&self.q) })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One envelope object
    Json,
    /// One JSON object per line, summary last
    Jsonl,
    Csv,
    Bfile,
    Pretty,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Jsonl => "jsonl",
            Format::Csv => "csv",
            Format::Bfile => "bfile",
            Format::Pretty => "pretty",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("0..5".parse::<Span>().unwrap(), Span { lo: 0, hi: 5 });
        assert_eq!("2..=4".parse::<Span>().unwrap(), Span { lo: 2, hi: 4 });
        assert_eq!("7".parse::<Span>().unwrap(), Span::single(7));
        assert!("5..2".parse::<Span>().is_err());
        assert!("-1..2".parse::<Span>().is_err());
        assert!("a".parse::<Span>().is_err());
    }

    #[test]
    fn bindings() {
        assert_eq!("symbolic".parse::<Binding>().unwrap(), Binding::Symbolic);
        assert_eq!("-3".parse::<Binding>().unwrap(), Binding::Int(BigInt::from(-3)));
        assert!("1/2".parse::<Binding>().is_err());
        let args = BindingArgs { s: Some(Binding::Int(0.into())), ..Default::default() };
        assert_eq!(args.resolve().unwrap().get(Var::S), Some(&SparsePoly::from(0)));
        let clash = BindingArgs { symbolic: true, ..args };
        assert!(clash.resolve().is_err());
    }
}
