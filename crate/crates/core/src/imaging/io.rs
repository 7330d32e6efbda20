//! PNG and binary PPM input, PNG output.

use std::fs::File;
use std::io::{BufReader, Read};
use std::path::Path;

use image::{DynamicImage, ImageFormat, ImageReader, RgbaImage};

use super::{RasterImage, Rgba};
use crate::error::{Error, Result};

/// Reads an 8-bit PNG (grey, grey+alpha, RGB, RGBA or palette) or a binary
/// PPM with maxval 255. RGB inputs become opaque; grey is copied to all
/// three colour channels.
pub fn decode_image_file(path: impl AsRef<Path>) -> Result<RasterImage> {
    let path = path.as_ref();
    let io_err = |source| Error::Io {
        path: path.to_owned(),
        source,
    };
    let unsupported = |detail: String| Error::UnsupportedFormat {
        path: path.to_owned(),
        detail,
    };

    let reader = ImageReader::open(path)
        .map_err(io_err)?
        .with_guessed_format()
        .map_err(io_err)?;
    match reader.format() {
        Some(ImageFormat::Png) => {}
        Some(ImageFormat::Pnm) => check_ppm_header(path)?,
        Some(other) => return Err(unsupported(format!("{other:?}"))),
        None => return Err(unsupported("unrecognised signature".into())),
    }

    let decoded = reader.decode().map_err(|source| Error::Decode {
        path: path.to_owned(),
        source,
    })?;
    let depth_err = |detail: &str| Error::BitDepthUnsupported {
        path: path.to_owned(),
        detail: detail.into(),
    };
    let rgba = match decoded {
        DynamicImage::ImageRgba8(img) => img,
        img @ (DynamicImage::ImageRgb8(_)
        | DynamicImage::ImageLuma8(_)
        | DynamicImage::ImageLumaA8(_)) => img.to_rgba8(),
        DynamicImage::ImageLuma16(_)
        | DynamicImage::ImageLumaA16(_)
        | DynamicImage::ImageRgb16(_)
        | DynamicImage::ImageRgba16(_) => return Err(depth_err("16-bit channels")),
        DynamicImage::ImageRgb32F(_) | DynamicImage::ImageRgba32F(_) => {
            return Err(depth_err("32-bit float channels"))
        }
        other => return Err(depth_err(&format!("{:?}", other.color()))),
    };

    let (width, height) = rgba.dimensions();
    let pixels: Vec<Rgba> = rgba.pixels().map(|p| p.0).collect();
    RasterImage::new(width, height, pixels)
}

/// Only `P6` with maxval 255 is accepted from the PNM family.
fn check_ppm_header(path: &Path) -> Result<()> {
    let mut head = Vec::with_capacity(512);
    File::open(path)
        .and_then(|f| BufReader::new(f).take(512).read_to_end(&mut head))
        .map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;

    let unsupported = |detail: String| Error::UnsupportedFormat {
        path: path.to_owned(),
        detail,
    };
    let tokens = header_tokens(&head, 4);
    if tokens.first().map(String::as_str) != Some("P6") {
        let magic = tokens.first().cloned().unwrap_or_default();
        return Err(unsupported(format!(
            "PNM variant {magic}, only binary PPM (P6) is read"
        )));
    }
    let maxval: u32 = tokens
        .get(3)
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| unsupported("truncated PPM header".into()))?;
    match maxval {
        255 => Ok(()),
        v if v > 255 => Err(Error::BitDepthUnsupported {
            path: path.to_owned(),
            detail: format!("PPM maxval {v}"),
        }),
        v => Err(unsupported(format!("PPM maxval {v}, expected 255"))),
    }
}

/// Whitespace separated header fields, skipping `#` comments.
fn header_tokens(bytes: &[u8], want: usize) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut in_comment = false;
    for &b in bytes {
        if tokens.len() == want {
            break;
        }
        if in_comment {
            in_comment = b != b'\n' && b != b'\r';
            continue;
        }
        if b == b'#' {
            in_comment = true;
        } else if b.is_ascii_whitespace() {
            if !current.is_empty() {
                tokens.push(std::mem::take(&mut current));
            }
        } else {
            current.push(b as char);
        }
    }
    tokens
}

/// Writes the raster as an 8-bit RGBA PNG.
pub fn write_png(img: &RasterImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let buf = RgbaImage::from_raw(img.width(), img.height(), img.clone().into_raw())
        .expect("raster buffer matches its dimensions");
    buf.save_with_format(path, ImageFormat::Png)
        .map_err(|source| match source {
            image::ImageError::IoError(e) => Error::Io {
                path: path.to_owned(),
                source: e,
            },
            source => Error::Encode {
                path: path.to_owned(),
                source,
            },
        })
}
