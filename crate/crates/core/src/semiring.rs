//! Semiring weights.
//!
//! Three concrete semirings are provided:
//!
//! - [`TropicalWeight`]: `(ℝ ∪ {+∞}, min, +, +∞, 0)`.
//! - [`StringWeight`]: a *left* semiring over label sequences where `⊕` is the
//!   longest common prefix and `⊗` is concatenation. Its zero is a formal
//!   infinite string.
//! - [`GallicWeight`]: the product of the string semiring with the tropical
//!   semiring. Output labels carried as string weights survive operations that
//!   only accumulate weights, which is what makes failure transductions work.
//!
//! All weights are immutable values.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::fst::{Label, SymbolTable};

/// A semiring `(K, ⊕, ⊗, 0, 1)`.
///
/// Only left distributivity is assumed; the string and gallic semirings are
/// not right distributive.
pub trait Semiring:
    Clone + fmt::Debug + fmt::Display + PartialEq + FromStr<Err = Error> + Send + Sync + 'static
{
    /// Whether `⊗` is commutative. Composition refuses non-commutative
    /// weights unless explicitly allowed.
    const COMMUTATIVE: bool;
    /// Whether `a ⊕ a = a` for every `a`.
    const IDEMPOTENT: bool;
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Human-readable rendering for drawings. String parts are shown with
    /// symbol names rather than label ids.
    fn render(&self, _syms: &SymbolTable) -> String {
        self.to_string()
    }
}

/// Tropical weight: `⊕ = min`, `⊗ = +`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct TropicalWeight(f64);

impl TropicalWeight {
    pub const fn new(value: f64) -> Self {
        TropicalWeight(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<f64> for TropicalWeight {
    fn from(value: f64) -> Self {
        TropicalWeight(value)
    }
}

impl Semiring for TropicalWeight {
    const COMMUTATIVE: bool = true;
    const IDEMPOTENT: bool = true;
    const NAME: &'static str = "tropical";

    fn zero() -> Self {
        TropicalWeight(f64::INFINITY)
    }

    fn one() -> Self {
        TropicalWeight(0.0)
    }

    fn plus(&self, rhs: &Self) -> Self {
        TropicalWeight(self.0.min(rhs.0))
    }

    fn times(&self, rhs: &Self) -> Self {
        TropicalWeight(self.0 + rhs.0)
    }
}

impl fmt::Display for TropicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for TropicalWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "Infinity" | "<inf>" => Ok(TropicalWeight::zero()),
            t => t
                .parse::<f64>()
                .ok()
                .filter(|v| !v.is_nan())
                .map(TropicalWeight)
                .ok_or_else(|| Error::WeightParse(s.to_string())),
        }
    }
}

const EMPTY_STRING_TEXT: &str = "<epsilon>";
const INFINITE_STRING_TEXT: &str = "<inf>";

/// Element of the string semiring.
///
/// The zero is a distinct case rather than a sentinel sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StringWeight {
    Finite(Vec<Label>),
    Infinite,
}

impl StringWeight {
    pub fn empty() -> Self {
        StringWeight::Finite(Vec::new())
    }

    pub fn from_labels(labels: impl IntoIterator<Item = Label>) -> Self {
        StringWeight::Finite(labels.into_iter().collect())
    }

    /// The string weight of a single output label; `ε` maps to the empty string.
    pub fn from_label(label: Label) -> Self {
        if label == crate::fst::EPSILON {
            StringWeight::empty()
        } else {
            StringWeight::Finite(vec![label])
        }
    }

    pub fn labels(&self) -> Option<&[Label]> {
        match self {
            StringWeight::Finite(s) => Some(s),
            StringWeight::Infinite => None,
        }
    }

    pub fn len(&self) -> Option<usize> {
        self.labels().map(<[Label]>::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }
}

impl Semiring for StringWeight {
    const COMMUTATIVE: bool = false;
    const IDEMPOTENT: bool = true;
    const NAME: &'static str = "string";

    fn zero() -> Self {
        StringWeight::Infinite
    }

    fn one() -> Self {
        StringWeight::empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (StringWeight::Infinite, w) | (w, StringWeight::Infinite) => w.clone(),
            (StringWeight::Finite(a), StringWeight::Finite(b)) => {
                let common = a.iter().zip(b).take_while(|(x, y)| x == y).count();
                StringWeight::Finite(a[..common].to_vec())
            }
        }
    }

    fn times(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (StringWeight::Finite(a), StringWeight::Finite(b)) => {
                let mut s = Vec::with_capacity(a.len() + b.len());
                s.extend_from_slice(a);
                s.extend_from_slice(b);
                StringWeight::Finite(s)
            }
            _ => StringWeight::Infinite,
        }
    }

    fn render(&self, syms: &SymbolTable) -> String {
        match self {
            StringWeight::Infinite => INFINITE_STRING_TEXT.to_string(),
            StringWeight::Finite(s) if s.is_empty() => "ε".to_string(),
            StringWeight::Finite(s) => s
                .iter()
                .map(|&l| syms.symbol(l).map_or_else(|| l.to_string(), str::to_string))
                .collect::<Vec<_>>()
                .join("_"),
        }
    }
}

impl fmt::Display for StringWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StringWeight::Infinite => f.write_str(INFINITE_STRING_TEXT),
            StringWeight::Finite(s) if s.is_empty() => f.write_str(EMPTY_STRING_TEXT),
            StringWeight::Finite(s) => {
                for (i, l) in s.iter().enumerate() {
                    if i > 0 {
                        f.write_str("_")?;
                    }
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for StringWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            INFINITE_STRING_TEXT => Ok(StringWeight::Infinite),
            EMPTY_STRING_TEXT | "" => Ok(StringWeight::empty()),
            t => t
                .split('_')
                .map(|p| p.parse::<Label>())
                .collect::<Result<Vec<_>, _>>()
                .map(StringWeight::Finite)
                .map_err(|_| Error::WeightParse(s.to_string())),
        }
    }
}

/// Gallic weight: a pair of a string weight and a tropical weight, combined
/// componentwise. `⊕` on the string part is the longest common prefix.
#[derive(Clone, Debug, PartialEq)]
pub struct GallicWeight {
    pub string: StringWeight,
    pub weight: TropicalWeight,
}

impl GallicWeight {
    pub fn new(string: StringWeight, weight: TropicalWeight) -> Self {
        GallicWeight { string, weight }
    }

    /// True when `self ⊗ v = v ⊗ self` for every gallic `v`: the string part
    /// is empty (tropical `⊗` commutes) or the weight is zero.
    pub fn commutes_with_all(&self) -> bool {
        self.string.is_empty() || self.is_zero()
    }
}

impl Semiring for GallicWeight {
    const COMMUTATIVE: bool = false;
    const IDEMPOTENT: bool = true;
    const NAME: &'static str = "gallic";

    fn zero() -> Self {
        GallicWeight::new(StringWeight::zero(), TropicalWeight::zero())
    }

    fn one() -> Self {
        GallicWeight::new(StringWeight::one(), TropicalWeight::one())
    }

    fn plus(&self, rhs: &Self) -> Self {
        GallicWeight::new(self.string.plus(&rhs.string), self.weight.plus(&rhs.weight))
    }

    fn times(&self, rhs: &Self) -> Self {
        GallicWeight::new(
            self.string.times(&rhs.string),
            self.weight.times(&rhs.weight),
        )
    }

    fn render(&self, syms: &SymbolTable) -> String {
        if self.weight.is_one() {
            self.string.render(syms)
        } else {
            format!("{},{}", self.string.render(syms), self.weight)
        }
    }
}

impl fmt::Display for GallicWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.string, self.weight)
    }
}

impl FromStr for GallicWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (string, weight) = s
            .trim()
            .rsplit_once(',')
            .ok_or_else(|| Error::WeightParse(s.to_string()))?;
        Ok(GallicWeight::new(string.parse()?, weight.parse()?))
    }
}
