fn main() {
    std::process::exit(formk1::run_cli());
}
