//! `key=value` configuration files.
//!
//! Keys are long option names without the leading dashes. Values are spliced
//! into the argument list right after the subcommand, so any flag given on the
//! command line overrides them.

use std::collections::BTreeMap;

use crate::CliError;

/// Global options that take a value and may precede the subcommand.
const GLOBAL_VALUED: [&str; 3] = ["--config", "--seed", "--threads"];

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", i + 1)))?;
        let key = key.trim();
        let valid = !key.is_empty()
            && key
                .bytes()
                .all(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'_');
        if !valid || key == "config" {
            return Err(CliError::Usage(format!(
                "config line {}: bad key `{key}`",
                i + 1
            )));
        }
        out.insert(key.replace('_', "-"), value.trim().to_string());
    }
    Ok(out)
}

/// Path given with `--config`, if any.
pub fn config_path(args: &[String]) -> Option<String> {
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

/// Inserts config entries after the subcommand token. Boolean entries
/// (`true`/`false`) become bare flags or are dropped.
pub fn splice_config(args: &[String], config: &BTreeMap<String, String>) -> Vec<String> {
    let mut at = None;
    let mut i = 1;
    while i < args.len() {
        let a = &args[i];
        if GLOBAL_VALUED.contains(&a.as_str()) {
            i += 2;
            continue;
        }
        if !a.starts_with('-') {
            at = Some(i + 1);
            break;
        }
        i += 1;
    }
    let Some(at) = at else {
        return args.to_vec();
    };
    let mut injected = Vec::new();
    for (key, value) in config {
        match value.as_str() {
            "true" => injected.push(format!("--{key}")),
            "false" => {}
            _ => {
                injected.push(format!("--{key}"));
                injected.push(value.clone());
            }
        }
    }
    let mut out = args[..at].to_vec();
    out.extend(injected);
    out.extend_from_slice(&args[at..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn parses_and_normalizes_keys() {
        let c = parse_config("# run\nreplicates = 3\nbin_width=7\n\nverbose=true\n").unwrap();
        assert_eq!(c["replicates"], "3");
        assert_eq!(c["bin-width"], "7");
        assert!(parse_config("novalue\n").is_err());
        assert!(parse_config("config=x\n").is_err());
        assert!(parse_config("a b=1\n").is_err());
    }

    #[test]
    fn splices_after_subcommand() {
        let c = parse_config("m=3\npopulation-std=true\nquiet=false\n").unwrap();
        let out = splice_config(
            &argv("tempnet --seed 4 --config c.txt analyze --graphs d"),
            &c,
        );
        assert_eq!(
            out,
            argv("tempnet --seed 4 --config c.txt analyze --m 3 --population-std --graphs d")
        );
        assert_eq!(config_path(&out).as_deref(), Some("c.txt"));
        assert_eq!(
            splice_config(&argv("tempnet --help"), &c),
            argv("tempnet --help")
        );
    }
}
