//! Command-line front end for the `rcp` crate.

pub mod app;
pub mod document;
pub mod latex;
pub mod parse;

use clap::Parser;

/// Captured result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match app::Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                stdout,
                stderr,
                code,
            };
        }
    };
    match app::dispatch(&cli, &args[1..]) {
        Ok(doc) => {
            let stderr = match &doc.error {
                Some(e) => format!("rcp: {e}\n"),
                None => String::new(),
            };
            Outcome {
                stdout: doc.render(cli.format),
                stderr,
                code: doc.exit,
            }
        }
        Err(app::InputError(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("rcp: {msg}\n"),
            code: 2,
        },
    }
}
