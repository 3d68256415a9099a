#pragma once

#include <stdexcept>
#include <string>

namespace dmst {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A window clipped against the frame contains zero pixels.
class EmptyWindowError : public Error {
public:
    using Error::Error;
};

// Every pixel fell outside the kernel support, leaving zero total weight.
class DegenerateKernelError : public Error {
public:
    using Error::Error;
};

// Two histograms of different bin counts were combined.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// A weighting annihilated every occupied histogram bin.
class ZeroMassError : public Error {
public:
    using Error::Error;
};

// No candidate pixel shares a bin with the target model; the target is lost.
class TargetLostError : public Error {
public:
    using Error::Error;
};

// Template evaluation requested with no stored candidate models.
class EmptyStoreError : public Error {
public:
    using Error::Error;
};

// A sequence-level operation received zero frames.
class EmptySequenceError : public Error {
public:
    using Error::Error;
};

// An image file could not be parsed.
class DecodeError : public Error {
public:
    using Error::Error;
};

// Frames in one sequence disagree on resolution.
class ResolutionMismatchError : public Error {
public:
    using Error::Error;
};

// A synthetic sequence spec violates its own invariants.
class SpecError : public Error {
public:
    using Error::Error;
};

// An output file could not be written.
class WriteError : public Error {
public:
    using Error::Error;
};

// Malformed configuration file or override.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace dmst
