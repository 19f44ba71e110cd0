#pragma once

#include "gctri/adversary.hpp"
#include "gctri/boolfn.hpp"
#include "gctri/bounds.hpp"
#include "gctri/errors.hpp"
#include "gctri/graph.hpp"
#include "gctri/io.hpp"
#include "gctri/problems.hpp"
#include "gctri/reduction.hpp"
#include "gctri/spectral.hpp"
#include "gctri/sweep.hpp"
