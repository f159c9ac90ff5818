//! Stereo SVG of every step of a decoupling. Pass an output directory, or
//! the figures go to the system temp directory.

use std::path::PathBuf;

use symplectica::dirac::{decouple_pair, BeamMatrix4, Pairing};
use symplectica::viz::{render_svg, scene_of, RenderOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;

    let s = BeamMatrix4::new(4.4, [-1.5, -1.5, 1.7], [-1.6, 0.7, -1.6], [0.9, -0.9, -2.6]);
    let (pipe, _) = decouple_pair(&s, Pairing::XxYy)?;
    let mut cur = s;
    for i in 0..=pipe.len() {
        if i > 0 {
            cur = pipe.steps()[i - 1].apply(&cur);
        }
        let opts = RenderOptions {
            title: Some(format!("XX_YY, step {i}")),
            ..RenderOptions::default()
        };
        let path = dir.join(format!("xx_yy-{i:02}.svg"));
        std::fs::write(&path, render_svg(&scene_of(&cur), &opts))?;
        println!("{}", path.display());
    }
    Ok(())
}
