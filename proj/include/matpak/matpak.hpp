#pragma once

// Umbrella header for the MatrixPak library: dense double-precision matrices,
// the bracket-dash text codec, and the exact rational verification oracle.

#include <matpak/matrix.hpp>
#include <matpak/ops.hpp>
#include <matpak/codec.hpp>
#include <matpak/rational.hpp>
#include <matpak/oracle.hpp>
