use clap::Parser;

fn main() {
    let config = pea::cli::RunConfig::parse();
    std::process::exit(pea::cli::run(config));
}
