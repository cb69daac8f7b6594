use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use congraph_cli::commands::{run, Cli, Command, Output};
use congraph_cli::serve::{serve, AppState};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Command::Serve { host, port, journal } = cli.command {
        let state = match journal {
            Some(path) => match AppState::with_journal(&path) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: journal {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            },
            None => AppState::in_memory(),
        };
        let runtime = tokio::runtime::Runtime::new().expect("tokio runtime");
        return match runtime.block_on(serve(&host, port, state)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        };
    }
    let text = match run(cli.command) {
        Ok(Output::Text(t)) => t,
        Ok(Output::Json(v)) => serde_json::to_string_pretty(&v).expect("json output") + "\n",
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    // a closed pipe (`| head`) is not an error
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        _ => ExitCode::SUCCESS,
    }
}
