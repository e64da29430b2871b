use clap::{value_parser, Arg, ArgAction, ArgMatches, Command};

use projbound::Registry;

use crate::command::{parse_ints, parse_rows, CommandRequest, CommandSpec, Kind, OutputFormat, Param, COMMANDS};
use crate::envelope::ErrorEnvelope;
use crate::{dispatch, CliError};

fn arg_for(name: &'static str, kind: Kind, help: &'static str) -> Arg {
    let arg = Arg::new(name).long(name).help(help);
    match kind {
        Kind::Int => arg.required(true).value_parser(value_parser!(i64)).allow_negative_numbers(true),
        Kind::OptInt => arg.value_parser(value_parser!(i64)).allow_negative_numbers(true),
        Kind::Flag => arg.action(ArgAction::SetTrue),
        Kind::OptBool => arg.value_parser(value_parser!(bool)),
        Kind::OptText => arg,
        Kind::Ints | Kind::Rows => arg.required(true).allow_hyphen_values(true),
    }
}

fn subcommand_for(name: &'static str, spec: &CommandSpec) -> Command {
    spec.params.iter().fold(Command::new(name).about(spec.about), |cmd, p| cmd.arg(arg_for(p.name, p.kind, p.help)))
}

pub fn build_cli() -> Command {
    let mut root = Command::new("projbound")
        .about("Exact section bounds and projection rules for embedded projective varieties")
        .subcommand_required(true)
        .arg_required_else_help(true)
        .arg(
            Arg::new("format")
                .long("format")
                .global(true)
                .value_parser(["text", "json"])
                .default_value("text")
                .help("output format"),
        )
        .arg(Arg::new("json").long("json").global(true).action(ArgAction::SetTrue).help("same as --format json"));
    let mut groups: Vec<&'static str> = Vec::new();
    for spec in COMMANDS {
        if !groups.contains(&spec.group()) {
            groups.push(spec.group());
        }
    }
    for group in groups {
        let members: Vec<&CommandSpec> = COMMANDS.iter().filter(|c| c.group() == group).collect();
        let cmd = match members.as_slice() {
            [only] if only.sub().is_none() => subcommand_for(group, only),
            _ => members.iter().fold(Command::new(group).subcommand_required(true), |cmd, spec| {
                cmd.subcommand(subcommand_for(spec.sub().expect("grouped commands have a subcommand"), spec))
            }),
        };
        root = root.subcommand(cmd);
    }
    root
}

fn collect(spec: &'static CommandSpec, m: &ArgMatches) -> Result<CommandRequest, CliError> {
    let mut req = CommandRequest::new(spec.path);
    for p in spec.params {
        let value = match p.kind {
            Kind::Int | Kind::OptInt => m.get_one::<i64>(p.name).map(|v| Param::Int(*v)),
            Kind::Flag => Some(Param::Flag(m.get_flag(p.name))),
            Kind::OptBool => m.get_one::<bool>(p.name).map(|v| Param::Flag(*v)),
            Kind::OptText => m.get_one::<String>(p.name).map(|v| Param::Text(v.clone())),
            Kind::Ints => match m.get_one::<String>(p.name) {
                Some(s) => Some(Param::Ints(parse_ints(s).map_err(|e| CliError::Validation(format!("--{}: {e}", p.name)))?)),
                None => None,
            },
            Kind::Rows => match m.get_one::<String>(p.name) {
                Some(s) => Some(Param::Rows(parse_rows(s).map_err(|e| CliError::Validation(format!("--{}: {e}", p.name)))?)),
                None => None,
            },
        };
        if let Some(v) = value {
            req.params.insert(p.name.to_string(), v);
        }
    }
    Ok(req)
}

/// Parses a full argument vector (program name first) into a request.
pub fn request_from_args<I, T>(args: I) -> Result<CommandRequest, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let matches = build_cli().try_get_matches_from(args)?;
    let json = matches.get_flag("json") || matches.get_one::<String>("format").map(String::as_str) == Some("json");
    let (group, gm) = matches.subcommand().expect("subcommand is required");
    let (path, leaf) = match gm.subcommand() {
        Some((sub, sm)) => (format!("{group} {sub}"), sm),
        None => (group.to_string(), gm),
    };
    let spec = crate::command::find_command(&path).expect("clap only accepts table commands");
    let mut req = collect(spec, leaf).map_err(|e| build_cli().error(clap::error::ErrorKind::ValueValidation, e.to_string()))?;
    req.output_format = if json { OutputFormat::Json } else { OutputFormat::Text };
    Ok(req)
}

/// Runs one invocation; returns `(stdout, stderr, exit code)`.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let req = match request_from_args(args) {
        Ok(r) => r,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 { (text, String::new(), 0) } else { (String::new(), text, code) };
        }
    };
    let registry = match Registry::load() {
        Ok(r) => r,
        Err(e) => return render_error(&req, &CliError::from(e)),
    };
    match dispatch(&req, &registry) {
        Ok(env) => {
            let out = match req.output_format {
                OutputFormat::Json => env.to_json() + "\n",
                OutputFormat::Text => env.to_text(),
            };
            (out, String::new(), env.exit_code())
        }
        Err(e) => render_error(&req, &e),
    }
}

fn render_error(req: &CommandRequest, e: &CliError) -> (String, String, i32) {
    match req.output_format {
        OutputFormat::Json => (ErrorEnvelope::new(&req.subcommand, e).to_json() + "\n", String::new(), e.exit_code()),
        OutputFormat::Text => (String::new(), format!("error ({}): {e}\n", e.kind()), e.exit_code()),
    }
}
