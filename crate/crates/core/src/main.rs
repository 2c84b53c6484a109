use std::io::Write;

fn main() {
    let code = {
        let stdin = std::io::stdin();
        let stdout = std::io::stdout();
        let mut out = std::io::BufWriter::new(stdout.lock());
        let code = cotough::cli::run(std::env::args_os(), &mut stdin.lock(), &mut out, &mut std::io::stderr());
        let _ = out.flush();
        code
    };
    std::process::exit(code);
}
