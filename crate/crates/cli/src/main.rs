//! `stegolab` command-line front end.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stegolab::glcm::{energies_csv, DiagonalEnergies};
use stegolab::harness::{report_csv, report_svg, run_benchmark, synthetic_corpus};
use stegolab::{
    cooccurrence, diagonal_energies, embed, extract, read_pgm, write_pgm, BitStream, EmbedConfig,
    Error, GrayImage, Method, Offset, OffsetSet, Traversal, DEFAULT_THRESHOLD,
};

#[derive(Parser)]
#[command(name = "stegolab", version, about = "LSB-matching steganography lab")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hide a payload file in a PGM cover.
    Embed(EmbedArgs),
    /// Recover a payload from a stego PGM.
    Extract(ExtractArgs),
    /// Dump the co-occurrence matrix of one offset as CSV.
    Glcm {
        #[arg(long)]
        image: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        offset: Offset,
        #[arg(long)]
        out: PathBuf,
    },
    /// Diagonal-band energies over the default feature offsets.
    Features {
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Energy and detection benchmark over a directory of PGM files.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        methods: Vec<Method>,
        #[arg(long, value_delimiter = ',', required = true)]
        rates: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Write a seeded synthetic corpus of smooth grayscale images.
    GenCorpus {
        #[arg(long)]
        n: usize,
        /// WxH, e.g. 128x128.
        #[arg(long, value_parser = parse_size)]
        size: (usize, usize),
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct Keying {
    #[arg(long)]
    method: Method,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value = "raster")]
    traversal: Traversal,
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    threshold: u32,
}

impl Keying {
    fn config(&self) -> EmbedConfig {
        EmbedConfig::new(self.method, self.seed)
            .with_traversal(self.traversal)
            .with_threshold(self.threshold)
    }
}

#[derive(Args)]
struct EmbedArgs {
    #[command(flatten)]
    key: Keying,
    #[arg(long)]
    cover: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    payload: PathBuf,
    /// Payload budget in bits per pixel.
    #[arg(long, default_value_t = 1.0)]
    rate: f64,
}

#[derive(Args)]
struct ExtractArgs {
    #[command(flatten)]
    key: Keying,
    #[arg(long)]
    stego: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

fn parse_size(s: &str) -> Result<(usize, usize), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WxH, got {s:?}"))?;
    let w: usize = w.parse().map_err(|_| format!("bad width in {s:?}"))?;
    let h: usize = h.parse().map_err(|_| format!("bad height in {s:?}"))?;
    if w == 0 || h == 0 {
        return Err("dimensions must be positive".into());
    }
    Ok((w, h))
}

fn load(path: &Path) -> stegolab::Result<GrayImage> {
    read_pgm(&fs::read(path)?)
}

fn load_corpus(dir: &Path) -> stegolab::Result<Vec<GrayImage>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e.eq_ignore_ascii_case("pgm")));
    paths.sort();
    if paths.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no .pgm files in {}",
            dir.display()
        )));
    }
    paths.iter().map(|p| load(p)).collect()
}

fn run(cli: Cli) -> stegolab::Result<()> {
    match cli.command {
        Command::Embed(args) => {
            let cover = load(&args.cover)?;
            let message = BitStream::from_bytes(&fs::read(&args.payload)?);
            let config = args.key.config().with_rate(args.rate);
            let stego = embed(&cover, &message, &config)?;
            fs::write(&args.out, write_pgm(&stego))?;
        }
        Command::Extract(args) => {
            let stego = load(&args.stego)?;
            let payload = extract(&stego, &args.key.config())?;
            fs::write(&args.out, payload.to_bytes())?;
        }
        Command::Glcm { image, offset, out } => {
            let img = load(&image)?;
            fs::write(out, cooccurrence(&img, offset).to_csv())?;
        }
        Command::Features { image, out } => {
            let img = load(&image)?;
            let rows = OffsetSet::feature_default()
                .offsets()
                .iter()
                .map(|&o| Ok((o, diagonal_energies(&cooccurrence(&img, o))?)))
                .collect::<stegolab::Result<Vec<(Offset, DiagonalEnergies<f64>)>>>()?;
            fs::write(out, energies_csv(&rows))?;
        }
        Command::Bench {
            corpus,
            methods,
            rates,
            threshold,
            seed,
            out,
            svg,
        } => {
            let images = load_corpus(&corpus)?;
            let report = run_benchmark::<f64>(&images, &methods, &rates, threshold, seed)?;
            fs::write(out, report_csv(&report))?;
            if let Some(svg) = svg {
                fs::write(svg, report_svg(&report))?;
            }
        }
        Command::GenCorpus { n, size, seed, out } => {
            fs::create_dir_all(&out)?;
            for (i, img) in synthetic_corpus(n, size.0, size.1, seed)?.iter().enumerate() {
                fs::write(out.join(format!("img_{i:04}.pgm")), write_pgm(img))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.category());
            ExitCode::from(1)
        }
    }
}
