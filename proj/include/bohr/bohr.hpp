#pragma once

#include "bohr/bounded.hpp"
#include "bohr/coeffseq.hpp"
#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"
#include "bohr/io.hpp"
#include "bohr/mappings.hpp"
#include "bohr/radii.hpp"
#include "bohr/rng.hpp"
#include "bohr/verify.hpp"
