use clap::Parser;

fn main() {
    let cli = match findim_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version arrive here too; only real usage errors
            // should exit nonzero (and with 1: code 2 means "violated").
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match findim_cli::execute(cli) {
        Ok((code, out)) => {
            print!("{out}");
            std::process::exit(code);
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
