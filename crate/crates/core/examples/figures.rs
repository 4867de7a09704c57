//! Writes all seven figures as SVG files into a directory (default `figures/`).

use std::path::PathBuf;

use proportionals::figures::{render, FigureSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;
    for id in 1..=7 {
        let svg = render(&FigureSpec::new(id))?;
        let path = dir.join(format!("figure-{id}.svg"));
        std::fs::write(&path, svg)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
