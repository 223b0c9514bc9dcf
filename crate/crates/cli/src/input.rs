use cactus_core::demos;
use cactus_core::localrules::{parse_corner, HighestWeightWord, StepKind};
use cactus_core::weights::{CartanContext, Family, Weight};
use clap::Args;

use crate::error::CliError;

/// `gl3`, `GL(3)`, `sp4` (rank 2), `Sp(4)`, `sl2`.
pub fn parse_group(s: &str) -> Result<CartanContext, CliError> {
    let t: String = s
        .chars()
        .filter(|c| !matches!(c, '(' | ')' | ' ' | '_' | '-'))
        .collect::<String>()
        .to_ascii_lowercase();
    let err = || CliError::Parse(format!("unknown group {s:?}; expected glN, spN (N even) or sl2"));
    if t == "sl2" {
        return Ok(CartanContext::sl2());
    }
    let (family, digits) = if let Some(d) = t.strip_prefix("gl") {
        (Family::GL, d)
    } else if let Some(d) = t.strip_prefix("sp") {
        (Family::Sp, d)
    } else {
        return Err(err());
    };
    let n: usize = digits.parse().map_err(|_| err())?;
    let rank = match family {
        Family::Sp if n.is_multiple_of(2) => n / 2,
        Family::Sp => return Err(err()),
        _ => n,
    };
    CartanContext::new(family, rank).map_err(|_| err())
}

/// `vector` or `extK` / `ΛK` for the K-th exterior power.
pub fn parse_step(s: &str) -> Result<StepKind, CliError> {
    let t = s.trim().to_ascii_lowercase();
    if t == "vector" || t == "v" {
        return Ok(StepKind::Vector);
    }
    let k = t
        .strip_prefix("ext")
        .or_else(|| t.strip_prefix('λ'))
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| CliError::Parse(format!("unknown step kind {s:?}; expected vector or extK")))?;
    Ok(StepKind::Exterior(k))
}

pub fn parse_word(ctx: CartanContext, s: &str) -> Result<HighestWeightWord, CliError> {
    let t = s.trim();
    if t.starts_with('[') {
        Ok(HighestWeightWord::parse_partitions(ctx, t)?)
    } else {
        Ok(HighestWeightWord::parse(ctx, t)?)
    }
}

pub fn parse_row(ctx: CartanContext, s: &str) -> Result<Vec<Weight>, CliError> {
    let t = s.trim();
    let pieces: Vec<String> = if t.starts_with('[') {
        t.split_inclusive(']')
            .map(|p| p.trim_start_matches([',', ' ']).to_string())
            .filter(|p| !p.is_empty())
            .collect()
    } else {
        t.split(',').map(str::to_string).collect()
    };
    pieces.iter().map(|p| Ok(parse_corner(ctx, p)?)).collect()
}

/// A highest weight word given inline or by the name of an example word.
#[derive(Debug, Args)]
pub struct WordInput {
    /// Corners such as `∅,1,2,21` or `[],[1],[2],[2,1]`
    #[arg(long, conflicts_with = "demo")]
    pub input: Option<String>,
    /// Group of the inline word: gl3, sp4, sl2, ...
    #[arg(long, default_value = "gl2")]
    pub group: String,
    /// Name of an example word (see `cactus demo --list`)
    #[arg(long)]
    pub demo: Option<String>,
}

impl WordInput {
    pub fn resolve(&self) -> Result<HighestWeightWord, CliError> {
        match (&self.input, &self.demo) {
            (Some(s), None) => parse_word(parse_group(&self.group)?, s),
            (None, Some(name)) => Ok(demos::named_word(name)?),
            _ => Err(CliError::Parse("give exactly one of --input or --demo".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        assert_eq!(parse_group("gl3").unwrap(), CartanContext::gl(3));
        assert_eq!(parse_group("GL(3)").unwrap(), CartanContext::gl(3));
        assert_eq!(parse_group("Sp(4)").unwrap(), CartanContext::sp(2));
        assert_eq!(parse_group("sl2").unwrap(), CartanContext::sl2());
        assert!(parse_group("sp3").is_err());
        assert!(parse_group("so5").is_err());
    }

    #[test]
    fn steps_and_rows() {
        assert_eq!(parse_step("ext2").unwrap(), StepKind::Exterior(2));
        assert_eq!(parse_step("vector").unwrap(), StepKind::Vector);
        let ctx = CartanContext::gl(2);
        assert_eq!(
            parse_row(ctx, "[],[1],[2,1]").unwrap(),
            parse_row(ctx, "∅,1,21").unwrap()
        );
    }
}
