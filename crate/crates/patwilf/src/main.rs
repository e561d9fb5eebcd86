use std::io::Write;

use clap::Parser;
use patwilf::cli::{run, Cli};
use patwilf::StatRegistry;

fn main() {
    let cli = Cli::parse();
    let registry = StatRegistry::default();
    let code = {
        let mut out = std::io::stdout().lock();
        let code = run(cli, &registry, &mut out, &mut std::io::stderr().lock());
        let _ = out.flush();
        code
    };
    std::process::exit(code);
}
