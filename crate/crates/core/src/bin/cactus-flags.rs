use std::io::{self, IsTerminal, Read};

use cactus_flags::cli::{run, Io};

fn main() {
    let stdin = io::stdin();
    let mut lock = stdin.lock();
    let piped = !io::stdin().is_terminal();
    let code = run(
        std::env::args_os(),
        Io {
            stdin: if piped { Some(&mut lock as &mut dyn Read) } else { None },
            out: &mut io::stdout().lock(),
            err: &mut io::stderr().lock(),
        },
    );
    std::process::exit(code);
}
