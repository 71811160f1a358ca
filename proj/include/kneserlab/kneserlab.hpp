#pragma once

// Umbrella header for the whole library.

#include "kneserlab/binom.hpp"
#include "kneserlab/bounds.hpp"
#include "kneserlab/families.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/io.hpp"
#include "kneserlab/kset.hpp"
#include "kneserlab/lex.hpp"
#include "kneserlab/lowint.hpp"
#include "kneserlab/numeric.hpp"
#include "kneserlab/rng.hpp"
#include "kneserlab/search.hpp"
#include "kneserlab/spectral.hpp"
#include "kneserlab/stats.hpp"
#include "kneserlab/types.hpp"
