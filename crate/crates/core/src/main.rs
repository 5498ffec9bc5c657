use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let (code, out) = polydendriform::cli::run(&args, &mut std::io::stdin().lock());
    let mut stdout = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = stdout.write_all(&out).and_then(|()| stdout.flush());
    std::process::exit(code);
}
