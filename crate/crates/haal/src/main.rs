use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, value) = haal::cli::run(&args);
    println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    ExitCode::from(code as u8)
}
