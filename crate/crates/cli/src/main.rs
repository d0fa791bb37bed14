use clap::Parser;

use chordcount::args::Cli;

fn main() {
    let cli = Cli::parse();
    let out = chordcount::run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code as i32);
}
