#pragma once

#include "sopcm/error.hpp"
#include "sopcm/groebner.hpp"
#include "sopcm/graph.hpp"
#include "sopcm/hilbert.hpp"
#include "sopcm/homology.hpp"
#include "sopcm/identification.hpp"
#include "sopcm/io.hpp"
#include "sopcm/koenig.hpp"
#include "sopcm/linalg.hpp"
#include "sopcm/monomial.hpp"
#include "sopcm/monomial_ideal.hpp"
#include "sopcm/polynomial.hpp"
#include "sopcm/poset.hpp"
#include "sopcm/prime_field.hpp"
#include "sopcm/simplicial_complex.hpp"
#include "sopcm/sop_diagnostics.hpp"
#include "sopcm/universal_sop.hpp"
