use std::collections::BTreeMap;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// A parsed parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param {
    Int(i64),
    Flag(bool),
    Text(String),
    Ints(Vec<i64>),
    /// Semicolon-separated rows of comma-separated integers.
    Rows(Vec<Vec<i64>>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Int,
    OptInt,
    Flag,
    OptBool,
    OptText,
    Ints,
    Rows,
}

impl Kind {
    pub fn required(self) -> bool {
        matches!(self, Kind::Int | Kind::Ints | Kind::Rows)
    }

    fn accepts(self, p: &Param) -> bool {
        matches!(
            (self, p),
            (Kind::Int | Kind::OptInt, Param::Int(_))
                | (Kind::Flag | Kind::OptBool, Param::Flag(_))
                | (Kind::OptText, Param::Text(_))
                | (Kind::Ints, Param::Ints(_))
                | (Kind::Rows, Param::Rows(_))
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: Kind,
    pub help: &'static str,
}

#[derive(Debug)]
pub struct CommandSpec {
    /// `"group sub"`, or a bare group name.
    pub path: &'static str,
    pub about: &'static str,
    pub params: &'static [ParamSpec],
}

impl CommandSpec {
    pub fn group(&self) -> &'static str {
        self.path.split(' ').next().unwrap_or(self.path)
    }

    pub fn sub(&self) -> Option<&'static str> {
        self.path.split_once(' ').map(|(_, s)| s)
    }
}

const fn p(name: &'static str, kind: Kind, help: &'static str) -> ParamSpec {
    ParamSpec { name, kind, help }
}

const N: ParamSpec = p("n", Kind::Int, "dimension of X");
const R: ParamSpec = p("r", Kind::Int, "codimension of X in P^(n+r)");
const D: ParamSpec = p("d", Kind::Int, "degree L^n");
const T: ParamSpec = p("t", Kind::Int, "tensor power of L");
const K: ParamSpec = p("k", Kind::Int, "dimension of Y");
const DELTA: ParamSpec = p("delta", Kind::Int, "degree L^k . Y");
const FULL: ParamSpec = p("full", Kind::Flag, "use the full Castelnuovo bound instead of the simplified one");
const S: ParamSpec = p("s", Kind::Int, "normal bundle twist, N = O(-s)");
const DIMS: ParamSpec = p("dims", Kind::Ints, "factor dimensions, e.g. 2,2");

const PROFILE: [ParamSpec; 7] = [
    N,
    K,
    p("linear", Kind::Flag, "Y is a linear P^k"),
    p("pic-rank-one", Kind::Flag, "h2(Y)_alg = 1"),
    p("cohomology-through", Kind::OptInt, "h2j(Y)_alg = 1 for j up to this value"),
    p("k-pi-1", Kind::Flag, "Y is a K(pi,1)"),
    p("ci", Kind::OptBool, "whether Y is a complete intersection of n-k divisors in |L|"),
];

const DIM_BOUNDS: [ParamSpec; 9] = [
    PROFILE[0],
    PROFILE[1],
    PROFILE[2],
    PROFILE[3],
    PROFILE[4],
    PROFILE[5],
    PROFILE[6],
    p("hartshorne", Kind::Flag, "assume Hartshorne's complete-intersection conjecture"),
    p("x-ci", Kind::Flag, "X itself is a complete intersection"),
];

const AT_DIM: [ParamSpec; 8] = [
    PROFILE[0],
    PROFILE[1],
    PROFILE[2],
    PROFILE[3],
    PROFILE[4],
    PROFILE[5],
    PROFILE[6],
    p("dim-z", Kind::Int, "dimension of the projection image Z"),
];

pub const COMMANDS: &[CommandSpec] = &[
    CommandSpec { path: "bounds upper", about: "upper bound for h0(tL)", params: &[N, R, D, T] },
    CommandSpec { path: "bounds easy", about: "lower bound C(t+n+1, n+1) for t < d", params: &[N, R, D, T] },
    CommandSpec { path: "bounds lower", about: "Castelnuovo lower bound for h0(tL)", params: &[N, R, D, T] },
    CommandSpec { path: "bounds simplified", about: "lower bound at R = 0, c = 1", params: &[N, R, T] },
    CommandSpec { path: "bounds kodaira", about: "lower bound at R = 0, c = n (kod(X) >= 0)", params: &[N, R, D, T] },
    CommandSpec {
        path: "exists guaranteed",
        about: "whether h0(tL (x) J_Y) > 0 is forced",
        params: &[N, R, D, K, DELTA, T, FULL],
    },
    CommandSpec { path: "exists min-t", about: "least t forcing a section vanishing on Y", params: &[N, R, D, K, DELTA, FULL] },
    CommandSpec { path: "exists threshold", about: "least t forcing h0(tL - D) > 0", params: &[N, R, DELTA] },
    CommandSpec { path: "exists codim2", about: "codimension-two positivity polynomial", params: &[N, R, DELTA] },
    CommandSpec {
        path: "lower-degree general",
        about: "bound on the least degree of a form vanishing on X in P^N",
        params: &[N, p("ambient", Kind::Int, "N"), D],
    },
    CommandSpec { path: "lower-degree surface", about: "lower-degree bound for surfaces", params: &[D] },
    CommandSpec {
        path: "lower-degree threefold",
        about: "lower-degree bound for threefolds",
        params: &[D, p("ambient", Kind::Int, "N >= 5")],
    },
    CommandSpec { path: "classify dim-bounds", about: "lower bounds on dim Z", params: &DIM_BOUNDS },
    CommandSpec { path: "classify at-dim", about: "structure forced at a given dim Z", params: &AT_DIM },
    CommandSpec {
        path: "classify divisor",
        about: "positivity of delta L - D",
        params: &[
            N,
            R,
            D,
            DELTA,
            p("q", Kind::OptInt, "codimension of D in its span"),
            p("castelnuovo", Kind::Flag, "assume the Castelnuovo-type conjecture"),
        ],
    },
    CommandSpec { path: "classify chern", about: "bound on c1 of the normal bundle of a linear P^k", params: &[N, K] },
    CommandSpec { path: "classify adjoint", about: "pairs where K_X + (n-1)L is not spanned", params: &[N, K] },
    CommandSpec { path: "triple analyze", about: "degree and fiber/base pairs of a degenerate triple", params: &[N, S] },
    CommandSpec { path: "triple degree", about: "L^n of a degenerate triple", params: &[N, S] },
    CommandSpec {
        path: "oracle h0",
        about: "h0 of O(a_1,...,a_m) on a product of projective spaces",
        params: &[DIMS, p("deg", Kind::Ints, "multidegree, e.g. 1,1")],
    },
    CommandSpec {
        path: "oracle intersect",
        about: "intersection number of n classes",
        params: &[DIMS, p("classes", Kind::Rows, "classes separated by ';', e.g. 1,1;1,1;1,1;2,0")],
    },
    CommandSpec { path: "oracle segre", about: "degree of the Segre embedding", params: &[DIMS] },
    CommandSpec {
        path: "verify",
        about: "run fixtures and consistency suites",
        params: &[
            p("all", Kind::Flag, "every fixture and every consistency suite"),
            p("fixture", Kind::OptText, "a single fixture by name"),
        ],
    },
];

pub fn find_command(path: &str) -> Option<&'static CommandSpec> {
    COMMANDS.iter().find(|c| c.path == path)
}

/// A subcommand with its parameters, ready for [`crate::dispatch`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandRequest {
    pub subcommand: String,
    pub params: BTreeMap<String, Param>,
    pub output_format: OutputFormat,
}

impl CommandRequest {
    pub fn new(subcommand: &str) -> Self {
        CommandRequest { subcommand: subcommand.to_string(), params: BTreeMap::new(), output_format: OutputFormat::Text }
    }

    pub fn with(mut self, name: &str, value: Param) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn int(self, name: &str, v: i64) -> Self {
        self.with(name, Param::Int(v))
    }

    pub fn flag(self, name: &str, v: bool) -> Self {
        self.with(name, Param::Flag(v))
    }

    /// Checks the subcommand exists, every parameter is known and of the
    /// right kind, and every required parameter is present.
    pub fn validate(&self) -> Result<&'static CommandSpec, CliError> {
        let spec = find_command(&self.subcommand)
            .ok_or_else(|| CliError::Validation(format!("unknown subcommand {:?}", self.subcommand)))?;
        for (name, value) in &self.params {
            let ps = spec
                .params
                .iter()
                .find(|ps| ps.name == name)
                .ok_or_else(|| CliError::Validation(format!("{}: unknown parameter --{name}", spec.path)))?;
            if !ps.kind.accepts(value) {
                return Err(CliError::Validation(format!("--{name}: expected {:?}", ps.kind)));
            }
        }
        if let Some(missing) = spec.params.iter().find(|ps| ps.kind.required() && !self.params.contains_key(ps.name)) {
            return Err(CliError::Validation(format!("{}: missing --{}", spec.path, missing.name)));
        }
        Ok(spec)
    }

    pub(crate) fn get_int(&self, name: &str) -> Result<i64, CliError> {
        self.opt_int(name)?.ok_or_else(|| CliError::Validation(format!("missing --{name}")))
    }

    pub(crate) fn opt_int(&self, name: &str) -> Result<Option<i64>, CliError> {
        match self.params.get(name) {
            None => Ok(None),
            Some(Param::Int(v)) => Ok(Some(*v)),
            Some(_) => Err(CliError::Validation(format!("--{name} must be an integer"))),
        }
    }

    pub(crate) fn get_flag(&self, name: &str) -> bool {
        matches!(self.params.get(name), Some(Param::Flag(true)))
    }

    pub(crate) fn opt_bool(&self, name: &str) -> Option<bool> {
        match self.params.get(name) {
            Some(Param::Flag(b)) => Some(*b),
            _ => None,
        }
    }

    pub(crate) fn opt_text(&self, name: &str) -> Option<&str> {
        match self.params.get(name) {
            Some(Param::Text(s)) => Some(s),
            _ => None,
        }
    }

    pub(crate) fn get_ints(&self, name: &str) -> Result<&[i64], CliError> {
        match self.params.get(name) {
            Some(Param::Ints(v)) => Ok(v),
            _ => Err(CliError::Validation(format!("missing --{name}"))),
        }
    }

    pub(crate) fn get_rows(&self, name: &str) -> Result<&[Vec<i64>], CliError> {
        match self.params.get(name) {
            Some(Param::Rows(v)) => Ok(v),
            _ => Err(CliError::Validation(format!("missing --{name}"))),
        }
    }
}

pub fn parse_ints(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| format!("{s:?} is not an integer")))
        .collect()
}

pub fn parse_rows(text: &str) -> Result<Vec<Vec<i64>>, String> {
    text.split(';').map(parse_ints).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_are_unique() {
        let mut paths: Vec<_> = COMMANDS.iter().map(|c| c.path).collect();
        paths.sort();
        paths.dedup();
        assert_eq!(paths.len(), COMMANDS.len());
    }

    #[test]
    fn validation() {
        let ok = CommandRequest::new("bounds lower").int("n", 2).int("r", 3).int("d", 8).int("t", 2);
        assert!(ok.validate().is_ok());
        assert!(CommandRequest::new("bounds lower").int("n", 2).validate().is_err());
        assert!(ok.clone().int("bogus", 1).validate().is_err());
        assert!(ok.clone().flag("n", true).validate().is_err());
        assert!(CommandRequest::new("nope").validate().is_err());
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_ints("2, 2").unwrap(), vec![2, 2]);
        assert_eq!(parse_rows("1,1;2,0").unwrap(), vec![vec![1, 1], vec![2, 0]]);
        assert!(parse_ints("a").is_err());
    }
}
