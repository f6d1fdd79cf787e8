pub fn run() {
    eprintln!("CLI under construction");
    std::process::exit(2);
}
