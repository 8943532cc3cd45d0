fn main() {
    std::process::exit(wtrans::report::cli::main_entry(std::env::args_os()));
}
