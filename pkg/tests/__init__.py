# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0
