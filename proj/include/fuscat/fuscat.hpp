#pragma once

#include "fuscat/braiding.hpp"
#include "fuscat/catalog.hpp"
#include "fuscat/diagnostics.hpp"
#include "fuscat/fact_homology.hpp"
#include "fuscat/fp_dimension.hpp"
#include "fuscat/fusion_ring.hpp"
#include "fuscat/internal_hom.hpp"
#include "fuscat/io.hpp"
#include "fuscat/ribbon.hpp"
