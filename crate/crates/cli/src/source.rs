//! Where a scheme comes from: a built-in constructor or a file.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use terwilliger::schemes::{
    johnson, parse_graph_file, parse_scheme_file, rook4, scheme_from_srg, serialize_graph_file, serialize_scheme_file,
    shrikhande, AssociationScheme, ChangSwitching, Graph, SchemeError, SrgParameters,
};

use crate::CliError;

/// Built-in constructors. Chang graphs use the conventional numbering
/// 1 = matching, 2 = triangle plus pentagon, 3 = octagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Johnson(usize),
    Rook4,
    Shrikhande,
    Chang(u8),
}

impl Builtin {
    /// Parses one name; `chang` alone expands to all three graphs.
    pub fn parse_many(spec: &str) -> Result<Vec<Builtin>, CliError> {
        let spec = spec.trim();
        if spec == "chang" {
            return Ok((1..=3).map(Builtin::Chang).collect());
        }
        Builtin::parse(spec).map(|b| vec![b])
    }

    pub fn parse(spec: &str) -> Result<Builtin, CliError> {
        let bad = || CliError::input(format!("unknown built-in `{spec}`; expected johnson:N, rook4, shrikhande or chang:1|2|3"));
        let (name, arg) = match spec.trim().split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (spec.trim(), None),
        };
        match (name, arg) {
            ("johnson", Some(n)) => {
                let n: usize = n.parse().map_err(|_| bad())?;
                if !(4..=40).contains(&n) {
                    return Err(CliError::input(format!("johnson:{n} is out of range; use 4 <= n <= 40")));
                }
                Ok(Builtin::Johnson(n))
            }
            ("rook4", None) => Ok(Builtin::Rook4),
            ("shrikhande", None) => Ok(Builtin::Shrikhande),
            ("chang", Some(k)) => match k {
                "1" => Ok(Builtin::Chang(1)),
                "2" => Ok(Builtin::Chang(2)),
                "3" => Ok(Builtin::Chang(3)),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }

    pub fn chang_switching(k: u8) -> ChangSwitching {
        match k {
            1 => ChangSwitching::Matching,
            2 => ChangSwitching::TriangleAndPentagon,
            _ => ChangSwitching::Octagon,
        }
    }

    fn graph(self) -> Option<Graph> {
        match self {
            Builtin::Johnson(_) => None,
            Builtin::Rook4 => Some(rook4()),
            Builtin::Shrikhande => Some(shrikhande()),
            Builtin::Chang(k) => Some(Builtin::chang_switching(k).graph()),
        }
    }

    /// The scheme or graph in the file format.
    pub fn emit(self) -> String {
        match self {
            Builtin::Johnson(n) => {
                let s = johnson(n).expect("range checked when parsed");
                serialize_scheme_file(s.table())
            }
            other => serialize_graph_file(&other.graph().expect("graph built-ins")),
        }
    }

    fn load(self) -> Loaded {
        let name = self.to_string();
        match self {
            Builtin::Johnson(n) => Loaded { name, scheme: johnson(n).expect("range checked when parsed"), srg: None, johnson: Some(n) },
            other => {
                let (scheme, params) = scheme_from_srg(&other.graph().expect("graph built-ins")).expect("built-ins are strongly regular");
                Loaded { name, scheme, srg: Some(params), johnson: None }
            }
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Johnson(n) => write!(f, "johnson:{n}"),
            Builtin::Rook4 => write!(f, "rook4"),
            Builtin::Shrikhande => write!(f, "shrikhande"),
            Builtin::Chang(k) => write!(f, "chang:{k}"),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Source {
    Builtin(Builtin),
    File(PathBuf),
}

/// A validated scheme ready for computation.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub name: String,
    pub scheme: AssociationScheme,
    /// Set when the input was a strongly regular graph.
    pub srg: Option<SrgParameters>,
    /// Set for the built-in Johnson schemes.
    pub johnson: Option<usize>,
}

impl Source {
    pub fn collect(schemes: &[String], files: &[PathBuf]) -> Result<Vec<Source>, CliError> {
        let mut out = Vec::new();
        for s in schemes {
            for part in s.split(',').filter(|p| !p.trim().is_empty()) {
                out.extend(Builtin::parse_many(part)?.into_iter().map(Source::Builtin));
            }
        }
        out.extend(files.iter().cloned().map(Source::File));
        if out.is_empty() {
            return Err(CliError::input("no input: give --scheme or --file"));
        }
        Ok(out)
    }

    pub fn load(&self) -> Result<Loaded, CliError> {
        match self {
            Source::Builtin(b) => Ok(b.load()),
            Source::File(path) => load_file(path),
        }
    }
}

/// Graph files have a one-number header, scheme files a two-number header.
fn is_graph_file(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|h| h.split_whitespace().count() == 1)
}

fn validation(path: &Path, e: SchemeError) -> CliError {
    match e {
        SchemeError::Parse { .. } | SchemeError::MalformedTable(_) | SchemeError::MalformedGraph(_) => {
            CliError::input(format!("{}: {e}", path.display()))
        }
        other => CliError::validation(format!("{}: {other}", path.display())),
    }
}

pub fn load_file(path: &Path) -> Result<Loaded, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string());
    if is_graph_file(&text) {
        let g = parse_graph_file(&text).map_err(|e| validation(path, e))?;
        let (scheme, params) = scheme_from_srg(&g).map_err(|e| validation(path, e))?;
        Ok(Loaded { name, scheme, srg: Some(params), johnson: None })
    } else {
        let table = parse_scheme_file(&text).map_err(|e| validation(path, e))?;
        let scheme = AssociationScheme::validate(table).map_err(|e| validation(path, e))?;
        Ok(Loaded { name, scheme, srg: None, johnson: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        assert_eq!(Builtin::parse("johnson:8").unwrap(), Builtin::Johnson(8));
        assert_eq!(Builtin::parse_many("chang").unwrap().len(), 3);
        assert_eq!(Builtin::parse("chang:2").unwrap().to_string(), "chang:2");
        for bad in ["johnson", "johnson:x", "johnson:3", "chang:4", "petersen", "rook4:2"] {
            assert_eq!(Builtin::parse(bad).unwrap_err().code, 1, "{bad}");
        }
    }

    #[test]
    fn file_kind() {
        assert!(is_graph_file("# c\n3\n010\n101\n010\n"));
        assert!(!is_graph_file("2 2\n0 1\n1 0\n"));
    }
}
