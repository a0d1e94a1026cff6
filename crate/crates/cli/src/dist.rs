//! Closed-form moment tables for a small library of distributions, assigned
//! per letter and independent across letters.

use std::collections::BTreeMap;
use std::str::FromStr;

use hopfwick::{Letter, MomentSpec, Multiset, Rat};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug)]
pub enum Dist {
    Gaussian { mean: Rat, variance: Rat },
    Poisson { rate: Rat },
    Exponential { rate: Rat },
    Bernoulli { p: Rat },
    Constant { value: Rat },
}

impl Dist {
    /// Raw moment of order `n`, exact.
    fn moment(&self, n: u32) -> Rat {
        match self {
            Dist::Gaussian { mean, variance } => {
                // binomial expansion over the centered part; odd central
                // moments vanish, even ones are (k-1)!! v^(k/2)
                let mut acc = Rat::zero();
                for k in (0..=n).step_by(2) {
                    let pairings = (1..i64::from(k))
                        .step_by(2)
                        .map(Rat::from_int)
                        .fold(Rat::one(), |x, y| x * y);
                    acc += Rat::binomial(n, k) * mean.pow(n - k) * pairings * variance.pow(k / 2);
                }
                acc
            }
            Dist::Poisson { rate } => {
                // Touchard: sum of Stirling numbers of the second kind
                let n = n as usize;
                let mut stirling = vec![vec![Rat::zero(); n + 1]; n + 1];
                stirling[0][0] = Rat::one();
                for i in 1..=n {
                    for k in 1..=i {
                        stirling[i][k] = Rat::from_int(k as i64) * stirling[i - 1][k].clone()
                            + stirling[i - 1][k - 1].clone();
                    }
                }
                let mut acc = Rat::zero();
                for (k, row) in stirling[n].iter().enumerate() {
                    acc += row.clone() * rate.pow(k as u32);
                }
                acc
            }
            Dist::Exponential { rate } => (Rat::factorial(n) / rate.pow(n)).expect("positive rate"),
            Dist::Bernoulli { p } => {
                if n == 0 {
                    Rat::one()
                } else {
                    p.clone()
                }
            }
            Dist::Constant { value } => value.pow(n),
        }
    }
}

/// One independent distribution per letter.
#[derive(Clone, Debug)]
pub struct DistributionSpec {
    assignments: BTreeMap<Letter, Dist>,
}

impl DistributionSpec {
    pub fn alphabet(&self) -> Vec<Letter> {
        self.assignments.keys().cloned().collect()
    }

    /// Exact joint moments up to `max_degree`; independence across letters
    /// makes every joint moment a product of single-letter moments.
    pub fn moments(&self, max_degree: u32) -> CliResult<MomentSpec> {
        let alphabet = self.alphabet();
        let mut values = BTreeMap::new();
        for m in Multiset::enumerate(&alphabet, max_degree) {
            let mut v = Rat::one();
            for (letter, count) in m.iter() {
                v *= self.assignments[letter].moment(count);
            }
            values.insert(m, v);
        }
        MomentSpec::new(alphabet, max_degree, values).map_err(CliError::from)
    }
}

fn parse_number(text: &str) -> CliResult<Rat> {
    let t = text.trim();
    Rat::from_str(t)
        .or_else(|_| Rat::from_decimal_str(t))
        .map_err(|_| CliError::Usage(format!("cannot parse number `{t}`")))
}

fn parse_dist(kind: &str, args: &[Rat]) -> CliResult<Dist> {
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "`{kind}` takes {n} parameter(s), got {}",
                args.len()
            )))
        }
    };
    match kind {
        "gaussian" => {
            arity(2)?;
            let variance = args[1].clone();
            if variance.is_negative() {
                return Err(CliError::Validation(
                    "gaussian variance must be >= 0".into(),
                ));
            }
            Ok(Dist::Gaussian {
                mean: args[0].clone(),
                variance,
            })
        }
        "poisson" => {
            arity(1)?;
            Ok(Dist::Poisson {
                rate: args[0].clone(),
            })
        }
        "exponential" => {
            arity(1)?;
            if args[0].is_negative() || args[0].is_zero() {
                return Err(CliError::Validation("exponential rate must be > 0".into()));
            }
            Ok(Dist::Exponential {
                rate: args[0].clone(),
            })
        }
        "bernoulli" => {
            arity(1)?;
            let p = args[0].clone();
            if p.is_negative() || (p.clone() - Rat::one()) > Rat::zero() {
                return Err(CliError::Validation(
                    "bernoulli p must lie in [0, 1]".into(),
                ));
            }
            Ok(Dist::Bernoulli { p })
        }
        "constant" => {
            arity(1)?;
            Ok(Dist::Constant {
                value: args[0].clone(),
            })
        }
        other => Err(CliError::Usage(format!("unknown distribution `{other}`"))),
    }
}

/// Splits on top-level commas or semicolons, ignoring separators inside
/// parentheses.
fn split_assignments(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (idx, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' | ';' if depth == 0 => {
                out.push(&text[start..idx]);
                start = idx + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

impl FromStr for DistributionSpec {
    type Err = CliError;

    /// Grammar: `letter=kind(arg, ..)` joined by top-level commas, e.g.
    /// `a=gaussian(0,1),b=poisson(1)`.
    fn from_str(s: &str) -> CliResult<Self> {
        let mut assignments = BTreeMap::new();
        for chunk in split_assignments(s) {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (letter_str, rest) = chunk.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("expected `letter=dist(..)` in `{chunk}`"))
            })?;
            let letter =
                Letter::new(letter_str.trim()).map_err(|e| CliError::Usage(e.to_string()))?;
            let rest = rest.trim();
            let open = rest
                .find('(')
                .ok_or_else(|| CliError::Usage(format!("missing `(` in `{rest}`")))?;
            if !rest.ends_with(')') {
                return Err(CliError::Usage(format!("missing `)` in `{rest}`")));
            }
            let kind = rest[..open].trim();
            let inner = &rest[open + 1..rest.len() - 1];
            let args = inner
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(parse_number)
                .collect::<CliResult<Vec<_>>>()?;
            let dist = parse_dist(kind, &args)?;
            if assignments.insert(letter.clone(), dist).is_some() {
                return Err(CliError::Usage(format!("letter `{letter}` assigned twice")));
            }
        }
        if assignments.is_empty() {
            return Err(CliError::Usage("empty distribution assignment".into()));
        }
        Ok(DistributionSpec { assignments })
    }
}
