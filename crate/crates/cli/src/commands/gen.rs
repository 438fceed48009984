use cubeideal::graphapps::{cycle_space, fixtures, staircase};

use crate::{input_error, CliResult, GenArgs, Output};

pub const FIXTURES: [&str; 7] =
    ["example-5.1", "cycle-space-K4", "cycle-space-C3", "cycle-space-Petersen", "staircase", "K22-dijoin", "chain"];

pub fn run(args: &GenArgs) -> CliResult<Output> {
    let text = match args.fixture.to_ascii_lowercase().as_str() {
        "example-5.1" | "chain" => {
            let n = args.n.unwrap_or(3);
            if n == 0 || n > cubeideal::setsys::max_dimension() {
                return Err(input_error(format!("--n {n} outside 1..={}", cubeideal::setsys::max_dimension())));
            }
            fixtures::chain(n).to_text()
        }
        "cycle-space-k4" => cycle_space(&fixtures::k4())?.to_text(),
        "cycle-space-c3" => cycle_space(&fixtures::triangle())?.to_text(),
        "cycle-space-petersen" => cycle_space(&fixtures::petersen())?.to_text(),
        "staircase" => staircase(args.k.ok_or_else(|| input_error("staircase needs --k"))?)?.to_text(),
        "k22-dijoin" | "k2,2-dijoin" => fixtures::k22_digraph().to_text(),
        other => {
            return Err(input_error(format!("unknown fixture {other:?}; expected one of {}", FIXTURES.join(", "))))
        }
    };
    Ok(Output::Text(text))
}
