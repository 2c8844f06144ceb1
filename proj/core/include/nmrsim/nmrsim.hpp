// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nmrsim/densmat.hpp"
#include "nmrsim/ensemble.hpp"
#include "nmrsim/error.hpp"
#include "nmrsim/io.hpp"
#include "nmrsim/pseudopure.hpp"
#include "nmrsim/repro.hpp"
#include "nmrsim/separability.hpp"
#include "nmrsim/tomography.hpp"
