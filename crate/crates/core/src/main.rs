fn main() -> std::process::ExitCode {
    qlt_core::cli::main()
}
