use std::io::{self, Write};
use std::process::ExitCode;

use macdonald_cli::App;

fn main() -> ExitCode {
    let app = App::from_env();
    let (stdout, stderr) = (io::stdout(), io::stderr());
    let code = app.run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    ExitCode::from(code)
}
