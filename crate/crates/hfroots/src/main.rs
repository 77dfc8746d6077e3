use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("HFROOTS_LOG")).init();
    hfroots::main_with_args(std::env::args_os())
}
