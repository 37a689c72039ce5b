"""Complex-valued RBM spectral coding toolkit.

Library layout:

- cnormal:     complex normal distribution, seeded RNG, Wirtinger helpers
- model:       complex-visible energy model (energy, conditionals, CD, training)
- optim:       complex and real first-order ascent steps
- gbrbm:       real Gaussian-Bernoulli baseline and the complex<->real mapping
- cpca:        complex principal component analysis
- sequence:    delta features, sparse augmentation matrix, trajectory search
- spectral:    STFT/ISTFT, Griffin-Lim, objective metrics
- persistence: binary model/basis/feature files, WAV and CSV I/O
- pipeline:    end-to-end waveform <-> latent compositions
- cli:         the `crbm` command line
"""

__version__ = "0.1.0"
