#pragma once

#include "siegel/igusa.hpp"

inline const siegel::igusa::GeneratorSet& generators() {
  static const siegel::igusa::GeneratorSet gen = siegel::igusa::build_generators(12);
  return gen;
}
