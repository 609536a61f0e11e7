//! Gradient-descent steppers for the training loop.

use crate::config::{OptimizerConfig, OptimizerMethod};

/// Optimizer state; one instance per trial.
pub(crate) enum Stepper {
    Adam {
        learning_rate: f64,
        beta1: f64,
        beta2: f64,
        epsilon: f64,
        m: Vec<f64>,
        v: Vec<f64>,
        step: usize,
    },
    Sgd {
        learning_rate: f64,
    },
}

impl Stepper {
    pub fn new(config: &OptimizerConfig, num_params: usize) -> Self {
        match config.method {
            OptimizerMethod::Adam => Stepper::Adam {
                learning_rate: config.learning_rate,
                beta1: 0.9,
                beta2: 0.999,
                epsilon: 1e-8,
                m: vec![0.0; num_params],
                v: vec![0.0; num_params],
                step: 0,
            },
            OptimizerMethod::Sgd => Stepper::Sgd {
                learning_rate: config.learning_rate,
            },
        }
    }

    pub fn step(&mut self, theta: &mut [f64], grad: &[f64]) {
        match self {
            Stepper::Adam {
                learning_rate,
                beta1,
                beta2,
                epsilon,
                m,
                v,
                step,
            } => {
                *step += 1;
                let t = *step as i32;
                // Bias-corrected step size.
                let lr_t = *learning_rate * (1.0 - beta2.powi(t)).sqrt() / (1.0 - beta1.powi(t));
                for i in 0..theta.len() {
                    m[i] = *beta1 * m[i] + (1.0 - *beta1) * grad[i];
                    v[i] = *beta2 * v[i] + (1.0 - *beta2) * grad[i] * grad[i];
                    theta[i] -= lr_t * m[i] / (v[i].sqrt() + *epsilon);
                }
            }
            Stepper::Sgd { learning_rate } => {
                for i in 0..theta.len() {
                    theta[i] -= *learning_rate * grad[i];
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adam_minimizes_a_quadratic() {
        let config = OptimizerConfig {
            learning_rate: 0.1,
            ..Default::default()
        };
        let mut stepper = Stepper::new(&config, 2);
        let mut x = vec![3.0, -2.0];
        for _ in 0..500 {
            let grad: Vec<f64> = x.iter().map(|xi| 2.0 * xi).collect();
            stepper.step(&mut x, &grad);
        }
        assert!(x[0].abs() < 1e-3 && x[1].abs() < 1e-3, "{x:?}");
    }

    #[test]
    fn sgd_takes_plain_steps() {
        let config = OptimizerConfig {
            method: OptimizerMethod::Sgd,
            learning_rate: 0.5,
            ..Default::default()
        };
        let mut stepper = Stepper::new(&config, 1);
        let mut x = vec![1.0];
        stepper.step(&mut x, &[1.0]);
        assert!((x[0] - 0.5).abs() < 1e-15);
    }
}
