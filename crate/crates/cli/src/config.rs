//! `--config file.json`: the object's entries become flags placed right
//! after the subcommand, so flags given on the command line override them.

use serde_json::Value;

use crate::error::CliError;

const SUBCOMMANDS: [&str; 4] = ["radius", "verify", "series", "table"];

/// Returns `argv` with the config file's flags spliced in.
pub fn merge_config(argv: Vec<String>) -> Result<Vec<String>, CliError> {
    let mut path = None;
    let mut rest = Vec::with_capacity(argv.len());
    let mut iter = argv.into_iter();
    while let Some(arg) = iter.next() {
        if arg == "--config" {
            path = Some(iter.next().ok_or_else(|| CliError::flag("--config", "missing file name"))?);
        } else if let Some(p) = arg.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(arg);
        }
    }
    let Some(path) = path else {
        return Ok(rest);
    };
    let file_err = |msg: String| CliError::File {
        path: path.clone(),
        msg,
    };
    let text = std::fs::read_to_string(&path).map_err(|e| file_err(e.to_string()))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| file_err(e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(file_err("expected a JSON object of flag values".into()));
    };
    let mut flags = Vec::new();
    for (key, v) in map {
        let flag = format!("--{key}");
        match v {
            Value::Null | Value::Bool(false) => {}
            Value::Bool(true) => flags.push(flag),
            Value::String(s) => flags.extend([flag, s]),
            Value::Number(n) => flags.extend([flag, n.to_string()]),
            Value::Array(items) => {
                let joined: Vec<String> = items
                    .iter()
                    .map(|i| match i {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect();
                flags.extend([flag, joined.join(",")]);
            }
            Value::Object(_) => return Err(file_err(format!("`{key}` must not be an object"))),
        }
    }
    let at = rest
        .iter()
        .position(|a| SUBCOMMANDS.contains(&a.as_str()))
        .map(|i| i + 1)
        .unwrap_or(rest.len());
    rest.splice(at..at, flags);
    Ok(rest)
}
