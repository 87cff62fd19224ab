// mdbook cannot compile listings against workspace crates, so every chapter
// is pulled in here as a module doc and `cargo test --doc` runs the code
// blocks. One module per chapter keeps failures traceable to a file.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("src/proximity.md")]
pub mod proximity {}
#[doc = include_str!("src/null-moments.md")]
pub mod null_moments {}
#[doc = include_str!("src/patterns.md")]
pub mod patterns {}
#[doc = include_str!("src/testing.md")]
pub mod testing {}
#[doc = include_str!("src/multiple-triangles.md")]
pub mod multiple_triangles {}
#[doc = include_str!("src/reproducibility.md")]
pub mod reproducibility {}
#[doc = include_str!("src/cli.md")]
pub mod cli {}
