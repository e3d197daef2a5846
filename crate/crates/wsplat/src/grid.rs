//! Dense scalar containers: 3D voxel grids, 2D planes and planar RGB images.

use crate::error::{Error, Result};

/// Dense 3D scalar field, x-fastest layout: `data[x + nx*(y + ny*z)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid3 {
    pub dims: [usize; 3],
    pub data: Vec<f64>,
}

impl Grid3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Grid3 {
            dims,
            data: vec![0.0; dims[0] * dims[1] * dims[2]],
        }
    }

    pub fn from_data(dims: [usize; 3], data: Vec<f64>) -> Self {
        assert_eq!(data.len(), dims[0] * dims[1] * dims[2]);
        Grid3 { dims, data }
    }

    #[inline]
    pub fn idx(&self, x: usize, y: usize, z: usize) -> usize {
        x + self.dims[0] * (y + self.dims[1] * z)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> f64 {
        self.data[self.idx(x, y, z)]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, z: usize, v: f64) {
        let i = self.idx(x, y, z);
        self.data[i] = v;
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Maximum absolute difference to another grid of the same dims.
    pub fn linf_diff(&self, other: &Grid3) -> f64 {
        assert_eq!(self.dims, other.dims);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn add(&self, other: &Grid3) -> Grid3 {
        assert_eq!(self.dims, other.dims);
        Grid3 {
            dims: self.dims,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Single-channel 2D plane, row-major: `data[x + width*y]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Plane {
    pub width: usize,
    pub height: usize,
    pub data: Vec<f64>,
}

impl Plane {
    pub fn zeros(width: usize, height: usize) -> Self {
        Plane {
            width,
            height,
            data: vec![0.0; width * height],
        }
    }

    pub fn from_data(width: usize, height: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), width * height);
        Plane { width, height, data }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[x + self.width * y]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: f64) {
        self.data[x + self.width * y] = v;
    }

    pub fn linf_diff(&self, other: &Plane) -> f64 {
        assert_eq!((self.width, self.height), (other.width, other.height));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Planar multi-channel image: `data[x + width*(y + height*c)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    pub width: usize,
    pub height: usize,
    pub channels: usize,
    pub data: Vec<f64>,
}

impl Image {
    pub fn zeros(width: usize, height: usize, channels: usize) -> Self {
        Image {
            width,
            height,
            channels,
            data: vec![0.0; width * height * channels],
        }
    }

    pub fn from_data(width: usize, height: usize, channels: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), width * height * channels);
        Image {
            width,
            height,
            channels,
            data,
        }
    }

    #[inline]
    pub fn plane(&self, c: usize) -> &[f64] {
        let n = self.width * self.height;
        &self.data[c * n..(c + 1) * n]
    }

    #[inline]
    pub fn plane_mut(&mut self, c: usize) -> &mut [f64] {
        let n = self.width * self.height;
        &mut self.data[c * n..(c + 1) * n]
    }

    #[inline]
    pub fn get(&self, c: usize, x: usize, y: usize) -> f64 {
        self.data[x + self.width * (y + self.height * c)]
    }

    #[inline]
    pub fn set(&mut self, c: usize, x: usize, y: usize, v: f64) {
        let i = x + self.width * (y + self.height * c);
        self.data[i] = v;
    }

    pub fn shape(&self) -> Vec<usize> {
        vec![self.channels, self.height, self.width]
    }

    pub fn same_shape(&self, other: &Image) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ImageShapeMismatch {
                a: self.shape(),
                b: other.shape(),
            });
        }
        Ok(())
    }

    /// Rec.601 luma of an RGB image; a 1-channel image is copied through.
    pub fn to_grayscale(&self) -> Plane {
        let mut p = Plane::zeros(self.width, self.height);
        if self.channels == 1 {
            p.data.copy_from_slice(self.plane(0));
            return p;
        }
        let (r, g, b) = (self.plane(0), self.plane(1), self.plane(2));
        for i in 0..p.data.len() {
            p.data[i] = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
        }
        p
    }

    pub fn mse(&self, other: &Image) -> Result<f64> {
        self.same_shape(other)?;
        let n = self.data.len() as f64;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            / n)
    }
}

/// Writes an 8-bit sRGB PNG: linear values clamped to [0,1] then encoded
/// with gamma 2.2.
pub fn write_png(image: &Image, path: &std::path::Path) -> Result<()> {
    assert_eq!(image.channels, 3);
    let mut buf = Vec::with_capacity(image.width * image.height * 3);
    for y in 0..image.height {
        for x in 0..image.width {
            for c in 0..3 {
                let v = image.get(c, x, y).clamp(0.0, 1.0);
                buf.push((v.powf(1.0 / 2.2) * 255.0).round() as u8);
            }
        }
    }
    let img = image::RgbImage::from_raw(image.width as u32, image.height as u32, buf)
        .expect("buffer sized above");
    img.save(path).map_err(|e| Error::ImageCodec(e.to_string()))
}

/// Reads a PNG back to linear values (inverse of [`write_png`]).
pub fn read_png(path: &std::path::Path) -> Result<Image> {
    let img = image::open(path)
        .map_err(|e| Error::ImageCodec(e.to_string()))?
        .to_rgb8();
    let (w, h) = (img.width() as usize, img.height() as usize);
    let mut out = Image::zeros(w, h, 3);
    for y in 0..h {
        for x in 0..w {
            let px = img.get_pixel(x as u32, y as u32);
            for c in 0..3 {
                out.set(c, x, y, (px[c] as f64 / 255.0).powf(2.2));
            }
        }
    }
    Ok(out)
}

/// Dumps raw float pixels: one JSON header line, then f64 little-endian
/// row-major planar data. Bit-exact storage for test comparison.
pub fn write_raw(image: &Image, path: &std::path::Path) -> Result<()> {
    use std::io::Write;
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    let header = serde_json::json!({
        "width": image.width,
        "height": image.height,
        "channels": image.channels,
        "dtype": "f64le",
        "layout": "planar row-major",
    });
    writeln!(f, "{header}")?;
    for v in &image.data {
        f.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_raw(path: &std::path::Path) -> Result<Image> {
    use std::io::{BufRead, Read};
    let mut f = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut header = String::new();
    f.read_line(&mut header)?;
    let meta: serde_json::Value = serde_json::from_str(header.trim())?;
    let w = meta["width"].as_u64().unwrap_or(0) as usize;
    let h = meta["height"].as_u64().unwrap_or(0) as usize;
    let c = meta["channels"].as_u64().unwrap_or(0) as usize;
    let mut blob = Vec::new();
    f.read_to_end(&mut blob)?;
    if blob.len() != w * h * c * 8 {
        return Err(Error::ImageCodec(format!(
            "raw dump holds {} bytes, expected {}",
            blob.len(),
            w * h * c * 8
        )));
    }
    let data = blob
        .chunks_exact(8)
        .map(|b| f64::from_le_bytes(b.try_into().unwrap()))
        .collect();
    Ok(Image::from_data(w, h, c, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grayscale_rec601_weights() {
        let mut img = Image::zeros(1, 1, 3);
        img.set(0, 0, 0, 1.0);
        img.set(1, 0, 0, 1.0);
        img.set(2, 0, 0, 1.0);
        let g = img.to_grayscale();
        assert!((g.get(0, 0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn raw_roundtrip_is_bit_exact() {
        let dir = std::env::temp_dir().join("wsplat_raw_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("img.raw");
        let img = Image::from_data(2, 2, 1, vec![0.1, -3.5, 1e-300, 42.0]);
        write_raw(&img, &path).unwrap();
        let back = read_raw(&path).unwrap();
        assert_eq!(img.data, back.data);
    }
}
