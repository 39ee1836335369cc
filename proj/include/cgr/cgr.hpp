#pragma once

#include "cgr/bcode.hpp"
#include "cgr/codec.hpp"
#include "cgr/dual.hpp"
#include "cgr/error.hpp"
#include "cgr/factorization.hpp"
#include "cgr/fixtures.hpp"
#include "cgr/gf2.hpp"
#include "cgr/graph.hpp"
#include "cgr/io.hpp"
#include "cgr/layout.hpp"
#include "cgr/metrics.hpp"
#include "cgr/search.hpp"
