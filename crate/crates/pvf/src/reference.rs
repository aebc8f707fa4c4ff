//! Independent reference implementations used to cross-check the fast paths.
//!
//! Nothing in here shares code with the production kernels: the decoder
//! reconstructs values from the IEEE-754 field definition in f64 arithmetic,
//! and the layer oracles are written as the plainest possible nested loops.
//! Tests compare the engine against these bit-for-bit.

use crate::bitops::SpecialClass;
use crate::tensor::Tensor;

/// Decodes an FP32 bit pattern from the field definition, without ever
/// calling `f32::from_bits`. NaN patterns map to `f64::NAN`.
pub fn decode_bits_independent(bits: u32) -> f64 {
    let sign = if bits >> 31 == 1 { -1.0f64 } else { 1.0f64 };
    let exponent = (bits >> 23) & 0xFF;
    let mantissa = (bits & 0x7F_FFFF) as f64;
    match (exponent, bits & 0x7F_FFFF) {
        (0xFF, 0) => sign * f64::INFINITY,
        (0xFF, _) => f64::NAN,
        (0, 0) => sign * 0.0,
        (0, _) => sign * 2f64.powi(-126) * (mantissa / 2f64.powi(23)),
        _ => sign * 2f64.powi(exponent as i32 - 127) * (1.0 + mantissa / 2f64.powi(23)),
    }
}

/// Classifies an FP32 bit pattern from the field definition alone.
pub fn classify_bits_independent(bits: u32) -> SpecialClass {
    let exponent = (bits >> 23) & 0xFF;
    let mantissa = bits & 0x7F_FFFF;
    if exponent == 0xFF {
        if mantissa == 0 {
            SpecialClass::Infinity
        } else {
            SpecialClass::Nan
        }
    } else if exponent == 0 {
        if mantissa == 0 {
            SpecialClass::Zero
        } else {
            SpecialClass::Subnormal
        }
    } else {
        SpecialClass::Normal
    }
}

/// Naive triple-loop dense layer: y_i = b_i + sum_j W[i][j] x[j], accumulated
/// strictly in j order.
pub fn naive_linear(x: &[f32], w: &[f32], b: &[f32], out_dim: usize, in_dim: usize) -> Vec<f32> {
    assert_eq!(x.len(), in_dim);
    assert_eq!(w.len(), out_dim * in_dim);
    assert_eq!(b.len(), out_dim);
    let mut y = vec![0.0f32; out_dim];
    for i in 0..out_dim {
        let mut acc = b[i];
        for j in 0..in_dim {
            acc += w[i * in_dim + j] * x[j];
        }
        y[i] = acc;
    }
    y
}

/// Naive six-loop valid cross-correlation, stride 1, kernel 5x5.
/// Accumulation order per output: channels, then kernel rows, then columns.
pub fn naive_conv2d(
    x: &[f32],
    kernel: &[f32],
    bias: &[f32],
    c_in: usize,
    h: usize,
    w: usize,
    c_out: usize,
    k: usize,
) -> Vec<f32> {
    let oh = h - k + 1;
    let ow = w - k + 1;
    let mut out = vec![0.0f32; c_out * oh * ow];
    for oc in 0..c_out {
        for oy in 0..oh {
            for ox in 0..ow {
                let mut acc = bias[oc];
                for ic in 0..c_in {
                    for ky in 0..k {
                        for kx in 0..k {
                            let xv = x[ic * h * w + (oy + ky) * w + (ox + kx)];
                            let kv = kernel[oc * c_in * k * k + ic * k * k + ky * k + kx];
                            acc += kv * xv;
                        }
                    }
                }
                out[oc * oh * ow + oy * ow + ox] = acc;
            }
        }
    }
    out
}

/// Elementwise-scan 2x2 max pool where NaN wins every comparison it enters.
pub fn naive_maxpool2(x: &[f32], c: usize, h: usize, w: usize) -> Vec<f32> {
    let oh = h / 2;
    let ow = w / 2;
    let mut out = vec![0.0f32; c * oh * ow];
    for ch in 0..c {
        for oy in 0..oh {
            for ox in 0..ow {
                let mut best = x[ch * h * w + (2 * oy) * w + 2 * ox];
                for dy in 0..2 {
                    for dx in 0..2 {
                        if dy == 0 && dx == 0 {
                            continue;
                        }
                        let v = x[ch * h * w + (2 * oy + dy) * w + (2 * ox + dx)];
                        if v.is_nan() {
                            best = v;
                        } else if !best.is_nan() && v > best {
                            best = v;
                        }
                    }
                }
                out[ch * oh * ow + oy * ow + ox] = best;
            }
        }
    }
    out
}

/// Naive scaled-dot-product attention over row-major Q [l, dk], K [l, dk],
/// V [l, dv]: row-wise softmax(Q K^T / sqrt(dk)) V with max-subtraction.
pub fn naive_attention(q: &[f32], k: &[f32], v: &[f32], l: usize, dk: usize, dv: usize) -> Vec<f32> {
    let scale = (dk as f32).sqrt();
    let mut out = vec![0.0f32; l * dv];
    for i in 0..l {
        let mut scores = vec![0.0f32; l];
        for j in 0..l {
            let mut acc = 0.0f32;
            for d in 0..dk {
                acc += q[i * dk + d] * k[j * dk + d];
            }
            scores[j] = acc / scale;
        }
        let mut max = scores[0];
        for &s in &scores[1..] {
            if s > max {
                max = s;
            }
        }
        let mut sum = 0.0f32;
        let mut weights = vec![0.0f32; l];
        for j in 0..l {
            weights[j] = (scores[j] - max).exp();
            sum += weights[j];
        }
        for j in 0..l {
            weights[j] /= sum;
        }
        for d in 0..dv {
            let mut acc = 0.0f32;
            for j in 0..l {
                acc += weights[j] * v[j * dv + d];
            }
            out[i * dv + d] = acc;
        }
    }
    out
}

/// Convenience wrapper producing a tensor from the naive dense layer.
pub fn naive_linear_tensor(x: &Tensor, w: &Tensor, b: &Tensor) -> Tensor {
    let (m, n) = (w.shape()[0], w.shape()[1]);
    Tensor::from_vec(vec![m], naive_linear(x.data(), w.data(), b.data(), m, n))
}
