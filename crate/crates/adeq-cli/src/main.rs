fn main() {
    adeq_cli::run()
}
